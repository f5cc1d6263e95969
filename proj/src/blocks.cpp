#include "monoendo/blocks.hpp"

#include <algorithm>

#include "monoendo/error.hpp"

namespace monoendo {

Block::Block(const CharParam& source, const WeylElt& w, std::size_t cap) {
  if (w.datum_ptr() != source.datum_ptr()) throw InputError("block element and parameter have different data");
  auto impl = std::make_shared<Impl>();
  impl->source = source;
  impl->target = w_act(w, source);
  impl->source_circ = w_circ(source);
  impl->target_circ = w_circ(impl->target);
  const ReflectionSubgroup& circ = impl->source_circ;
  impl->w_min = circ.min_coset_rep(w);
  impl->w_max = impl->w_min * circ.longest();

  const RootDatum& d = source.datum();
  auto maps_into = [&](const WeylElt& u, bool positive) {
    for (auto a = circ.positive_roots().find_first(); a != RootSet::npos; a = circ.positive_roots().find_next(a))
      if (d.is_positive(u.root_image(static_cast<int>(a))) != positive) return false;
    return true;
  };
  MONOENDO_CHECK(maps_into(impl->w_min, true), "w_min does not keep Phi+_L positive");
  MONOENDO_CHECK(maps_into(impl->w_max, false), "w_max does not send Phi+_L negative");

  int n_min = 0, n_max = 0;
  for (const WeylElt& x : circ.elements(cap)) {
    WeylElt m = impl->w_min * x;
    if (maps_into(m, true)) ++n_min;
    if (maps_into(m, false)) ++n_max;
    MONOENDO_CHECK(m.length() >= impl->w_min.length() && m.length() <= impl->w_max.length(),
                   "block extremes are not length extremes");
    impl->index.emplace(m.perm(), static_cast<int>(impl->members.size()));
    impl->ell.push_back(circ.length(x));
    impl->members.push_back(std::move(m));
  }
  MONOENDO_CHECK(n_min == 1 && n_max == 1, "block minimal/maximal element is not unique");
  impl_ = std::move(impl);
}

bool Block::contains(const WeylElt& w) const { return member_index(w) >= 0; }

int Block::member_index(const WeylElt& w) const {
  if (w.datum_ptr() != source().datum_ptr()) return -1;
  auto it = impl_->index.find(w.perm());
  return it == impl_->index.end() ? -1 : it->second;
}

int Block::ell_beta(const WeylElt& w) const {
  const int k = member_index(w);
  if (k < 0) throw InputError("element is not in the block");
  return impl_->ell[k];
}

WeylElt Block::circ_part(const WeylElt& w) const {
  if (!contains(w)) throw InputError("element is not in the block");
  return w_min().inverse() * w;
}

std::vector<Block> blocks(const CharParam& target, const CharParam& source) {
  std::vector<Block> out;
  for (const WeylElt& w : transporter_min_reps(source, target)) out.emplace_back(source, w);
  return out;
}

Block block_of(const CharParam& source, const WeylElt& w) { return Block(source, w); }

Block neutral_block(const CharParam& chi) { return Block(chi, WeylElt::identity(chi.datum_ptr())); }

Block block_mul(const Block& gamma, const Block& beta) {
  if (!(gamma.source() == beta.target())) throw InputError("blocks are not composable");
  const WeylElt w = gamma.w_min() * beta.w_min();
  Block r(beta.source(), w);
  MONOENDO_CHECK(r.w_min() == w, "w^gamma w^beta is not minimal in gamma beta");
  MONOENDO_CHECK(r.w_max() == gamma.w_min() * beta.w_max(), "w_{gamma beta} != w^gamma w_beta");
  MONOENDO_CHECK(r.w_max() == gamma.w_max() * beta.w_min(), "w_{gamma beta} != w_gamma w^beta");
  MONOENDO_CHECK(r.target() == gamma.target(), "product has the wrong target");
  return r;
}

int ell_beta_inversions(const CharParam& source, const WeylElt& w) {
  const RootSet phi = phi_L(source);
  const RootDatum& d = source.datum();
  int n = 0;
  for (int a = 0; a < d.num_positive(); ++a)
    if (phi[a] && !d.is_positive(w.root_image(a))) ++n;
  return n;
}

int ell_beta_word_count(const CharParam& source, const std::vector<int>& word) {
  CharParam cur = source;
  int n = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (cur.on_coroot(*it).numerator() == 0) ++n;
    cur = simple_act(*it, cur);
  }
  return n;
}

int ell_beta(const Block& beta, const WeylElt& w) {
  const int a = beta.ell_beta(w);
  MONOENDO_CHECK(a == ell_beta_inversions(beta.source(), w), "ell_beta: coset and inversion formulas differ");
  MONOENDO_CHECK(a == ell_beta_word_count(beta.source(), w.reduced_word()),
                 "ell_beta: coset and word-count formulas differ");
  return a;
}

bool block_leq(const Block& beta, const WeylElt& w1, const WeylElt& w2) {
  if (!beta.contains(w1) || !beta.contains(w2)) throw InputError("element is not in the block");
  const bool r = beta.source_circ().bruhat_leq(beta.circ_part(w1), beta.circ_part(w2));
  if (r) MONOENDO_CHECK(bruhat_leq(w1, w2), "block order does not imply Bruhat order");
  return r;
}

WeylElt conj_by_min(const Block& beta, const WeylElt& x) {
  const ReflectionSubgroup& src = beta.source_circ();
  if (!src.contains(x)) throw InputError("element is not in W°_L");
  const WeylElt y = beta.w_min() * x * beta.w_min().inverse();
  const ReflectionSubgroup& dst = beta.target_circ();
  MONOENDO_CHECK(dst.contains(y), "conjugate leaves W°_L'");
  MONOENDO_CHECK(dst.length(y) == src.length(x), "conjugation by w^beta changes length");
  return y;
}

std::size_t XiGroupoid::find_morphism(std::size_t t, std::size_t s, const WeylElt& w) const {
  const auto& ms = morphisms[t][s];
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (ms[k] == w) return k;
  throw InternalError("element is not a morphism of Xi");
}

std::size_t XiGroupoid::compose(std::size_t t, std::size_t m, std::size_t s, std::size_t g, std::size_t b) const {
  return find_morphism(t, s, morphisms[t][m][g] * morphisms[m][s][b]);
}

XiGroupoid xi_groupoid(const OrbitData& orbit) {
  XiGroupoid xi;
  xi.objects = orbit.members;
  const std::size_t n = orbit.size();
  const CharParam& base = orbit.members[0];
  const auto omega = transporter_min_reps(base, base);
  std::vector<WeylElt> to(n), from(n);
  for (std::size_t k = 0; k < n; ++k) {
    to[k] = WeylElt::from_word(base.datum_ptr(), orbit.transport_words[k]);
    from[k] = to[k].inverse();
  }
  xi.morphisms.assign(n, std::vector<std::vector<WeylElt>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    const ReflectionSubgroup circ = w_circ(orbit.members[s]);
    for (std::size_t t = 0; t < n; ++t) {
      auto& ms = xi.morphisms[t][s];
      for (const auto& r : omega) ms.push_back(circ.min_coset_rep(to[t] * r * from[s]));
      std::sort(ms.begin(), ms.end());
    }
  }
  return xi;
}

std::pair<int, int> aff_fiber_dimension(const WeylElt& w, const WeylElt& w2) {
  require_same_datum(w, w2);
  const RootDatum& d = w.datum();
  const int lhs = w.length() + w2.length() - (w * w2).length();
  // gamma in Phi^- with w gamma > 0 and w2^-1 gamma > 0
  std::vector<int> pre(d.num_roots());
  for (int b = 0; b < d.num_roots(); ++b) pre[w2.root_image(b)] = b;
  int count = 0;
  for (int g = d.num_positive(); g < d.num_roots(); ++g)
    if (d.is_positive(w.root_image(g)) && d.is_positive(pre[g])) ++count;
  return {lhs, 2 * count};
}

}  // namespace monoendo
