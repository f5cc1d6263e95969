#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monoendo/root_datum.hpp"

namespace monoendo {

// Finite-order homomorphism chi: X_* -> Q/Z, stored by its values on the
// cocharacter basis as numerators modulo the order N.
class CharParam {
 public:
  CharParam() = default;
  CharParam(DatumPtr d, const RatVec& values);
  static CharParam trivial(const DatumPtr& d);
  // Entries "a/b" or "a"; throws InputError on malformed fractions.
  static CharParam parse(const DatumPtr& d, const std::vector<std::string>& values);

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& numerators() const { return num_; }
  Rat value(int k) const { return Rat(num_[k], order_); }
  RatVec values() const;
  // chi(lambda) in [0, 1).
  Rat evaluate(const IntVec& cochar) const;
  Rat on_coroot(int a) const { return evaluate(datum_->coroot(a)); }
  bool is_trivial() const { return order_ == 1; }
  // Multiply by an integer (the k-th power of the character).
  CharParam scaled(std::int64_t k) const;

  bool operator==(const CharParam& o) const {
    return datum_ == o.datum_ && order_ == o.order_ && num_ == o.num_;
  }
  bool operator<(const CharParam& o) const;
  std::size_t hash() const noexcept;
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

 private:
  DatumPtr datum_;
  std::int64_t order_ = 1;
  std::vector<std::int64_t> num_;
};

struct CharParamHash {
  std::size_t operator()(const CharParam& c) const noexcept { return c.hash(); }
};

// (w chi)(lambda) = chi(w^-1 lambda).
CharParam w_act(const WeylElt& w, const CharParam& chi);
CharParam simple_act(int s, const CharParam& chi);

// All roots (both signs) with chi(alpha^vee) = 0.
RootSet phi_L(const CharParam& chi);
ReflectionSubgroup w_circ(const CharParam& chi);

// W_L / W°_L with minimal-length coset representatives; reps[0] = e.
struct OmegaGroup {
  std::vector<WeylElt> reps;
  std::vector<std::vector<int>> table;  // reps[a] reps[b] lies in coset table[a][b]
  int order() const { return static_cast<int>(reps.size()); }
  int identity() const { return 0; }
  int inverse(int a) const;
  int index_of(const WeylElt& min_rep) const;  // -1 if absent
  bool is_abelian() const;
  // Orders of cyclic factors in invariant-factor form, e.g. {2, 2} or {4}.
  std::vector<int> invariant_factors() const;
  std::string structure() const;  // "1", "Z/3", "Z/2xZ/2"
};

struct Stabilizer {
  ReflectionSubgroup w_circ;
  OmegaGroup omega;
  std::uint64_t order() const { return w_circ.order() * static_cast<std::uint64_t>(omega.order()); }
};

Stabilizer stabilizer_and_omega(const CharParam& chi);

// Minimal elements w^beta of the cosets w W°_from with w from = to, sorted.
// Empty when the two parameters are not W-conjugate.
std::vector<WeylElt> transporter_min_reps(const CharParam& from, const CharParam& to);
// Some w with w from = to.
std::optional<WeylElt> find_transporter(const CharParam& from, const CharParam& to);

// Root datum with the same lattices whose simple roots are those of g. Its
// Weyl group acts on X_* by the same matrices as g.
DatumPtr subgroup_datum(const ReflectionSubgroup& g);
// Root datum with the same lattices and root system Phi_L.
DatumPtr endoscopic_datum(const CharParam& chi);

struct OrbitData {
  std::vector<CharParam> members;
  std::unordered_map<CharParam, std::size_t, CharParamHash> index;
  // transport[k] maps members[0] to members[k]
  std::vector<std::vector<int>> transport_words;
  // simple_action[s][k] = index of s members[k]
  std::vector<std::vector<std::size_t>> simple_action;

  std::size_t size() const { return members.size(); }
  std::size_t index_of(const CharParam& c) const;  // throws InputError
  bool contains(const CharParam& c) const { return index.count(c) > 0; }
  std::size_t act(const WeylElt& w, std::size_t k) const;
};

std::uint64_t orbit_size(const CharParam& chi);
OrbitData orbit(const CharParam& chi, std::size_t cap = default_weyl_cap());

// Warning text when chi is not compatible with the prime power q, else empty.
std::string q_compatibility(const CharParam& chi, std::int64_t q);
bool is_prime_power(std::int64_t q);

}  // namespace monoendo
