#pragma once

#include <memory>
#include <vector>

#include "monoendo/char_param.hpp"

namespace monoendo {

// A coset w^beta W°_L inside {w : w L = L'}.
class Block {
 public:
  Block() = default;
  // The block containing w, viewed as a map source -> w source.
  Block(const CharParam& source, const WeylElt& w, std::size_t cap = default_weyl_cap());

  const CharParam& source() const { return impl_->source; }
  const CharParam& target() const { return impl_->target; }
  const WeylElt& w_min() const { return impl_->w_min; }
  const WeylElt& w_max() const { return impl_->w_max; }
  const ReflectionSubgroup& source_circ() const { return impl_->source_circ; }
  const ReflectionSubgroup& target_circ() const { return impl_->target_circ; }
  // Members w_min x in breadth-first order of x in W°_L.
  const std::vector<WeylElt>& members() const { return impl_->members; }
  std::size_t size() const { return impl_->members.size(); }
  bool contains(const WeylElt& w) const;
  int member_index(const WeylElt& w) const;  // -1 if absent
  bool is_neutral() const { return impl_->w_min.is_identity(); }

  // ell_beta(w) = ell_L(w_min^-1 w); throws InputError when w is not a member.
  int ell_beta(const WeylElt& w) const;
  // The W°_L part x of w = w_min x.
  WeylElt circ_part(const WeylElt& w) const;

  bool operator==(const Block& o) const {
    return source() == o.source() && target() == o.target() && w_min() == o.w_min();
  }

 private:
  struct Impl {
    CharParam source, target;
    WeylElt w_min, w_max;
    ReflectionSubgroup source_circ, target_circ;
    std::vector<WeylElt> members;
    std::vector<int> ell;
    std::unordered_map<std::vector<int>, int, IntSeqHash> index;
  };
  std::shared_ptr<const Impl> impl_;
};

// Blocks of {w : w L = L'} (empty when not conjugate), ordered by w_min.
std::vector<Block> blocks(const CharParam& target, const CharParam& source);
Block block_of(const CharParam& source, const WeylElt& w);
Block neutral_block(const CharParam& chi);

// gamma . beta; requires gamma.source() == beta.target().
Block block_mul(const Block& gamma, const Block& beta);

int ell_beta(const Block& beta, const WeylElt& w);
// #{alpha in Phi+_L : w alpha < 0}
int ell_beta_inversions(const CharParam& source, const WeylElt& w);
// #{j : s_{i_j} in W°_{L_{j-1}}} for w = s_{a_1} ... s_{a_n} (i_j = a_{n+1-j}),
// L_0 = source, L_j = s_{i_j} L_{j-1}. Any word; equality for reduced words.
int ell_beta_word_count(const CharParam& source, const std::vector<int>& word);

// w' <=_beta w, computed in the Bruhat order of W°_L.
bool block_leq(const Block& beta, const WeylElt& w1, const WeylElt& w2);

// x in W°_L  ->  w^beta x (w^beta)^-1 in W°_{L'}.
WeylElt conj_by_min(const Block& beta, const WeylElt& x);

// Groupoid with objects the orbit members and morphisms the minimal elements.
struct XiGroupoid {
  std::vector<CharParam> objects;
  // morphisms[t][s] = { w^beta : beta a block from objects[s] to objects[t] }
  std::vector<std::vector<std::vector<WeylElt>>> morphisms;
  std::size_t find_morphism(std::size_t t, std::size_t s, const WeylElt& w) const;  // throws
  // Index of w^gamma w^beta inside morphisms[t][s].
  std::size_t compose(std::size_t t, std::size_t m, std::size_t s, std::size_t g, std::size_t b) const;
};

XiGroupoid xi_groupoid(const OrbitData& orbit);

// (l(w) + l(w') - l(ww'), 2 #(Phi^- cap w^-1 Phi^+ cap w' Phi^+)); equal for all w, w'.
std::pair<int, int> aff_fiber_dimension(const WeylElt& w, const WeylElt& w2);

}  // namespace monoendo
