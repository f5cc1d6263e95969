#pragma once

// Brute-force reference for finite Coxeter groups given by generator
// matrices. Shares nothing with the library beyond the Matrix type.

#include <cstdint>
#include <map>
#include <vector>

#include "monoendo/linalg.hpp"

namespace oracle {

using monoendo::IntMat;
using Poly = std::vector<std::int64_t>;  // coefficients in q, low degree first

class Coxeter {
 public:
  // dim is needed only when gens is empty.
  explicit Coxeter(std::vector<IntMat> gens, int dim = 1);

  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return static_cast<int>(gens_.size()); }
  const IntMat& elem(int x) const { return elems_[x]; }
  int length(int x) const { return len_[x]; }
  const std::vector<int>& word(int x) const { return word_[x]; }
  int id(const IntMat& m) const;  // -1 when absent
  int lmul(int s, int x) const { return lmul_[s][x]; }
  int rmul(int x, int s) const { return rmul_[s][x]; }
  bool left_descent(int x, int s) const { return len_[lmul_[s][x]] < len_[x]; }
  bool right_descent(int x, int s) const { return len_[rmul_[s][x]] < len_[x]; }

  // Subword criterion on the stored reduced word of w.
  bool leq(int x, int w) const { return below_[w][x]; }
  const Poly& kl(int x, int w) const { return kl_[x][w]; }
  std::int64_t mu(int x, int w) const;
  // Two-sided cells from the mu-graph and descent sets.
  std::vector<std::vector<int>> two_sided_cells() const;

 private:
  void build_kl();
  std::vector<IntMat> gens_;
  std::vector<IntMat> elems_;
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  std::vector<std::vector<int>> lmul_, rmul_;
  std::map<IntMat, int> index_;
  std::vector<std::vector<bool>> below_;
  std::vector<std::vector<Poly>> kl_;
};

// Discrete log of -1 in F_q^x relative to a generator, scaled into [0,1):
// returns k/(q-1) with g^k = -1, computed by brute force in F_p or F_p[x]/(f).
struct FiniteField {
  explicit FiniteField(int q);
  int q, p, deg;
  std::vector<int> modulus;  // monic, low degree first, size deg+1
  std::vector<std::vector<int>> elements;
  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const;
  int order_of(const std::vector<int>& a) const;
  std::vector<int> generator() const;
  std::vector<int> minus_one() const;
};

}  // namespace oracle
