#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoendo/blocks.hpp"
#include "monoendo/cells.hpp"
#include "monoendo/char_param.hpp"

namespace monoendo {

enum class TwistKind { frobenius, automorphism };

// epsilon = q-Frobenius composed with delta (situation A), or the finite-order
// automorphism delta (situation B). delta is an automorphism of X_* preserving
// the simple coroots and, dually, the simple roots.
class Twist {
 public:
  static Twist frobenius(const DatumPtr& d, std::int64_t q, const IntMat& delta);
  static Twist split(const DatumPtr& d, std::int64_t q) { return frobenius(d, q, IntMat::identity(d->rank())); }
  static Twist automorphism(const DatumPtr& d, const IntMat& delta);

  // delta with delta(alpha_i^vee) = alpha_{perm[i]}^vee; semisimple data only.
  static IntMat diagram(const DatumPtr& d, const std::vector<int>& perm);
  // -w0, the opposition involution (order reversal composed with inversion for SL_n).
  static IntMat opposition(const DatumPtr& d);

  TwistKind kind() const { return kind_; }
  std::int64_t q() const { return q_; }
  const DatumPtr& datum() const { return datum_; }
  const IntMat& delta() const { return delta_; }
  const std::vector<int>& root_perm() const { return root_perm_; }
  std::vector<int> simple_perm() const;
  bool delta_is_identity() const { return delta_ == IntMat::identity(delta_.rows()); }
  // delta w delta^-1
  WeylElt act(const WeylElt& w) const;
  std::string description() const;

 private:
  Twist() = default;
  void init(const DatumPtr& d, const IntMat& delta);
  TwistKind kind_ = TwistKind::automorphism;
  std::int64_t q_ = 0;
  DatumPtr datum_;
  IntMat delta_, delta_inv_;
  std::vector<int> root_perm_;
};

// q^-1 (delta_* chi) in situation A, delta_* chi in situation B, where
// (delta_* chi)(lambda) = chi(delta^-1 lambda). Throws InputError when gcd(q, N) != 1.
CharParam eps_act(const Twist& eps, const CharParam& chi);

struct AdOrbit {
  std::vector<std::size_t> members;  // indices into OrbitReport::blocks
  std::vector<int> stabilizer;       // Omega_{c,beta}, indices into omega.reps
  std::vector<int> stabilizer_full;  // Omega_beta
};

struct OrbitReport {
  CharParam chi, eps_chi;
  OmegaGroup omega;
  CellPartition partition;
  std::size_t cell = 0;
  std::vector<int> omega_c;
  std::vector<Block> blocks;                        // all blocks L <- eps L
  std::vector<std::vector<std::size_t>> cell_perm;  // w^beta eps on cells, per block
  std::vector<std::size_t> b_c;                     // blocks preserving the cell
  std::vector<AdOrbit> orbits;                      // Ad_eps(Omega_c)-orbits on b_c
  // sigma[k][i]: position in Delta_L of w^beta eps(alpha_i), for beta = blocks[b_c[k]]
  std::vector<std::vector<int>> sigma;
};

// Throws RefusalError when eps moves the orbit or no block fixes the cell.
OrbitReport b_set(const CharParam& chi, const Twist& eps, std::size_t cell = 0);

struct TorusCount {
  std::uint64_t count = 0;
  OrbitReport report;
};

// Number of irreducible representations of G^eps with semisimple parameter the
// orbit of chi, when W°_L = 1. Throws RefusalError otherwise.
TorusCount count_torus_case(const CharParam& chi, const Twist& eps);

}  // namespace monoendo
