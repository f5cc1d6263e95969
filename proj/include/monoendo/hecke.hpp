#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "monoendo/char_param.hpp"
#include "monoendo/laurent.hpp"

namespace monoendo {

class HeckeAlgebra;

// (w id in the WeylGroup, orbit index of L), standing for T_w 1_L.
using HeckeKey = std::pair<std::size_t, std::size_t>;

// Finite sum of a(v) T_w 1_L.
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(const HeckeAlgebra* alg) : alg_(alg) {}

  const HeckeAlgebra& algebra() const { return *alg_; }
  const HeckeAlgebra* algebra_ptr() const { return alg_; }
  const std::map<HeckeKey, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const HeckeKey& k) const;
  bool is_zero() const { return terms_.empty(); }
  void add(const HeckeKey& k, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a);
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  bool operator==(const HeckeElt& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }

 private:
  const HeckeAlgebra* alg_ = nullptr;
  std::map<HeckeKey, LaurentPoly> terms_;
};

// Coefficients of sum c_{w,L} with the canonical basis, keyed like HeckeElt.
using CanonicalExpansion = std::map<HeckeKey, LaurentPoly>;
using ScalarElt = std::map<HeckeKey, mpq_class>;

// Canonical basis data for a fixed right idempotent 1_L, all w in W.
struct CanonicalColumn {
  // p[w][y] = p_{y,L;w,L}, coefficient of Ttilde_y 1_L in c_{w,L}
  std::vector<std::vector<LaurentPoly>> p;
  // r[w][y] = coefficient of Ttilde_y 1_L in bar(Ttilde_w 1_L)
  std::vector<std::vector<LaurentPoly>> r;
};

// Monodromic Hecke algebra of W with idempotents indexed by a W-orbit of
// parameters. Elements hold a raw pointer; the algebra must outlive them.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const CharParam& chi, std::size_t cap = default_weyl_cap());
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const DatumPtr& datum() const { return weyl_.datum(); }
  const WeylGroup& weyl() const { return weyl_; }
  const OrbitData& orbit() const { return orbit_; }
  std::size_t orbit_size() const { return orbit_.size(); }
  // Orbit index of w L_k.
  std::size_t act(std::size_t w, std::size_t k) const { return act_[w * orbit_.size() + k]; }
  // s_i in W°_{L_k}
  bool simple_in_circ(int i, std::size_t k) const { return in_circ_[i * orbit_.size() + k] != 0; }
  HeckeKey key(const WeylElt& w, const CharParam& l) const;

  HeckeElt zero() const { return HeckeElt(this); }
  HeckeElt one() const;
  HeckeElt idempotent(std::size_t k) const;
  HeckeElt T(std::size_t w, std::size_t k) const;
  HeckeElt T_tilde(std::size_t w, std::size_t k) const;
  // T_w^-1 1_L
  HeckeElt T_inv(std::size_t w, std::size_t k) const;

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  // T_s a
  HeckeElt left_simple(int s, const HeckeElt& a) const;
  HeckeElt bar(const HeckeElt& a) const;

  // Computed on first use, then read-only.
  const CanonicalColumn& column(std::size_t k) const;
  HeckeElt canonical(std::size_t w, std::size_t k) const;
  CanonicalExpansion to_canonical(const HeckeElt& a) const;
  HeckeElt from_canonical(const CanonicalExpansion& e) const;
  // Coefficients h with c_a c_b = sum h c_v.
  CanonicalExpansion structure_constants(const HeckeKey& a, const HeckeKey& b) const;

  // Image under v -> v0 (v0 != 0), and the product of the specialized algebra.
  ScalarElt specialize(const HeckeElt& a, const mpq_class& v0) const;
  ScalarElt mul_specialized(const ScalarElt& a, const ScalarElt& b, const mpq_class& v0) const;

 private:
  WeylGroup weyl_;
  OrbitData orbit_;
  std::vector<std::size_t> act_;
  std::vector<char> in_circ_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::unique_ptr<CanonicalColumn>> columns_;
};

// Checks the triangular characterization; throws InternalError on failure.
void verify_column(const HeckeAlgebra& h, std::size_t k);

}  // namespace monoendo
