#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "monoendo/linalg.hpp"

namespace monoendo {

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;
using RootSet = boost::dynamic_bitset<>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};
struct IntSeqHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

// One irreducible component of a finite Cartan matrix. `nodes` lists the
// simple indices in Bourbaki order for `letter`.
struct CartanComponent {
  char letter = 'A';
  int rank = 0;
  std::vector<int> nodes;
  std::string label() const;
};

// Parses "A2", "C2xA1", "B_3" into (letter, rank) pairs.
std::vector<std::pair<char, int>> parse_cartan_type(std::string_view type);
// Cartan matrix A(i,j) = <alpha_i, alpha_j^vee> in Bourbaki numbering.
IntMat cartan_matrix(std::string_view type);
// Components of a finite Cartan matrix; throws InputError if not of finite type.
std::vector<CartanComponent> identify_cartan(const IntMat& a);
std::string cartan_label(const std::vector<CartanComponent>& comps);
std::uint64_t weyl_order(const std::vector<CartanComponent>& comps);

enum class Isogeny { simply_connected, adjoint, custom };

class RootDatum : public std::enable_shared_from_this<RootDatum> {
 public:
  // Semisimple datum. For simply connected data X_* is the coroot lattice with
  // the simple-coroot basis, except type C_n which uses e_1..e_n. Adjoint uses
  // the fundamental-coweight basis.
  static DatumPtr from_cartan(std::string_view type, Isogeny iso);
  // Semisimple datum with X_* spanned by the given rows, written in rational
  // simple-coroot coordinates. Must lie between coroot and coweight lattices.
  static DatumPtr from_lattice(std::string_view type, const RatMat& basis_rows);
  // Arbitrary (possibly reductive) datum: rows are simple roots in X^* and
  // simple coroots in X_*, both against the identity basis of Z^rank.
  static DatumPtr from_simple(const IntMat& simple_roots, const IntMat& simple_coroots);

  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(cartan_.rows()); }
  int num_positive() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  bool is_positive(int a) const { return a < num_pos_; }
  int negate(int a) const { return a < num_pos_ ? a + num_pos_ : a - num_pos_; }

  const IntVec& root(int a) const { return roots_[a]; }
  const IntVec& coroot(int a) const { return coroots_[a]; }
  // Coefficients in the simple roots (resp. simple coroots).
  const IntVec& root_coeffs(int a) const { return root_coeffs_[a]; }
  const IntVec& coroot_coeffs(int a) const { return coroot_coeffs_[a]; }
  int height(int a) const;
  int root_index(const IntVec& v) const;    // -1 if not a root
  int coroot_index(const IntVec& v) const;  // -1 if not a coroot
  int root_from_coeffs(const IntVec& c) const;

  std::int64_t pairing(const IntVec& character, const IntVec& cochar) const;
  const IntMat& cartan() const { return cartan_; }
  const std::vector<CartanComponent>& components() const { return components_; }
  std::string type_label() const { return cartan_label(components_); }
  std::uint64_t weyl_group_order() const { return weyl_order(components_); }
  int component_of(int simple) const { return node_component_[simple]; }

  const IntMat& simple_reflection_matrix(int i) const { return simple_mats_[i]; }
  const std::vector<int>& simple_reflection_perm(int i) const { return simple_perms_[i]; }
  // Reflection in root a as a matrix on X_* and as a root permutation.
  IntMat reflection_matrix(int a) const;
  std::vector<int> reflection_perm(int a) const;
  // Root permutation induced by an automorphism of X_* (nullopt if not one).
  std::optional<std::vector<int>> perm_of_matrix(const IntMat& m) const;

  // Basis of X_* in rational simple-coroot coordinates (empty for
  // reductive data built from simple systems).
  const RatMat& cochar_basis() const { return basis_rows_; }
  const std::string& description() const { return description_; }

 private:
  RootDatum() = default;
  static std::shared_ptr<RootDatum> lattice_impl(std::string_view type, const RatMat& basis_rows);
  void build(const IntMat& simple_roots, const IntMat& simple_coroots);

  int rank_ = 0;
  int num_pos_ = 0;
  IntMat cartan_;
  std::vector<IntVec> roots_, coroots_, root_coeffs_, coroot_coeffs_;
  std::unordered_map<IntVec, int, IntVecHash> root_lookup_, coroot_lookup_, coeff_lookup_;
  std::vector<CartanComponent> components_;
  std::vector<int> node_component_;
  std::vector<IntMat> simple_mats_;
  std::vector<std::vector<int>> simple_perms_;
  RatMat basis_rows_;
  std::string description_;
};

// Weyl group element, canonicalized by its matrix on X_*.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(const DatumPtr& d);
  static WeylElt simple(const DatumPtr& d, int i);
  static WeylElt reflection(const DatumPtr& d, int root);
  static WeylElt from_word(const DatumPtr& d, std::span<const int> word);
  // Throws InputError when m is not in W.
  static WeylElt from_matrix(const DatumPtr& d, const IntMat& m);

  bool valid() const { return static_cast<bool>(datum_); }
  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  const IntMat& matrix() const { return mat_; }
  const std::vector<int>& perm() const { return perm_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  int root_image(int a) const { return perm_[a]; }
  bool has_right_descent(int i) const { return !datum_->is_positive(perm_[i]); }
  bool has_left_descent(int i) const;
  // Reduced word i_1..i_k with w = s_{i_1} ... s_{i_k}.
  std::vector<int> reduced_word() const;

  WeylElt inverse() const;
  WeylElt operator*(const WeylElt& o) const;
  WeylElt times_simple(int i) const;   // w s_i
  WeylElt simple_times(int i) const;   // s_i w

  IntVec act_cochar(const IntVec& x) const { return mat_ * x; }
  // w acting on a rational cocharacter.
  RatVec act_cochar(const RatVec& x) const;

  bool operator==(const WeylElt& o) const { return mat_ == o.mat_; }
  bool operator<(const WeylElt& o) const;
  std::size_t hash() const noexcept { return IntSeqHash{}(perm_); }

 private:
  WeylElt(DatumPtr d, IntMat m, std::vector<int> p);
  DatumPtr datum_;
  IntMat mat_;
  std::vector<int> perm_;
  int length_ = 0;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const noexcept { return w.hash(); }
};

void require_same_datum(const WeylElt& a, const WeylElt& b);

bool bruhat_leq(const WeylElt& x, const WeylElt& w);
WeylElt longest_element(const DatumPtr& d);

// Enumeration cap: MONOENDO_WEYL_CAP, else 10^6.
std::size_t default_weyl_cap();

// Full enumeration of W, ids sorted by length, with multiplication tables
// by simple reflections.
class WeylGroup {
 public:
  explicit WeylGroup(DatumPtr d, std::size_t cap = default_weyl_cap());

  const DatumPtr& datum() const { return datum_; }
  std::size_t size() const { return perms_.size(); }
  int rank() const { return datum_->semisimple_rank(); }
  WeylElt element(std::size_t id) const;
  std::size_t id_of(const WeylElt& w) const;
  std::size_t id_of_perm(const std::vector<int>& perm) const;
  int length(std::size_t id) const { return lengths_[id]; }
  const std::vector<int>& word(std::size_t id) const { return words_[id]; }
  const std::vector<int>& perm(std::size_t id) const { return perms_[id]; }
  std::size_t left(int s, std::size_t id) const { return left_[id * rank() + s]; }
  std::size_t right(std::size_t id, int s) const { return right_[id * rank() + s]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t id) const;
  std::size_t longest() const { return perms_.size() - 1; }
  std::vector<WeylElt> elements() const;

 private:
  DatumPtr datum_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<std::size_t> left_, right_;
  std::unordered_map<std::vector<int>, std::size_t, IntSeqHash> index_;
};

std::vector<WeylElt> enumerate_weyl(const DatumPtr& d, std::size_t cap = default_weyl_cap());

// Subgroup of W generated by reflections in a closed root subsystem, viewed as
// a Coxeter group on its indecomposable positive roots.
class ReflectionSubgroup {
 public:
  ReflectionSubgroup() = default;
  // `positive` flags positive root indices of the subsystem.
  ReflectionSubgroup(DatumPtr d, RootSet positive);
  static ReflectionSubgroup whole(const DatumPtr& d);

  const DatumPtr& datum() const { return datum_; }
  const RootSet& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.count()); }
  bool contains_root(int a) const;
  // Simple roots as ambient root indices, ascending.
  const std::vector<int>& simple_roots() const { return simple_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  const WeylElt& generator(int k) const { return gens_[k]; }
  // Position of ambient root index in simple_roots(), or -1.
  int simple_position(int root) const;

  bool is_trivial() const { return simple_.empty(); }
  bool contains(const WeylElt& w) const;
  int length(const WeylElt& w) const;
  bool has_right_descent(const WeylElt& w, int k) const;
  bool has_left_descent(const WeylElt& w, int k) const;
  // Word in generator positions k_1..k_m with w = t_{k_1} ... t_{k_m}.
  std::vector<int> reduced_word(const WeylElt& w) const;
  WeylElt from_word(std::span<const int> word) const;
  WeylElt identity() const { return WeylElt::identity(datum_); }
  WeylElt longest() const;
  // Minimal-length element of w * (this subgroup).
  WeylElt min_coset_rep(const WeylElt& w) const;
  bool bruhat_leq(const WeylElt& x, const WeylElt& w) const;
  std::vector<WeylElt> elements(std::size_t cap = default_weyl_cap()) const;
  std::uint64_t order() const { return weyl_order(components_); }
  const IntMat& cartan() const { return cartan_; }
  std::string type_label() const { return cartan_label(components_); }

  bool operator==(const ReflectionSubgroup& o) const { return positive_ == o.positive_; }

 private:
  DatumPtr datum_;
  RootSet positive_;
  std::vector<int> simple_;
  std::vector<WeylElt> gens_;
  IntMat cartan_;
  std::vector<CartanComponent> components_;
};

}  // namespace monoendo
