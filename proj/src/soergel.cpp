#include "monoendo/soergel.hpp"

#include "monoendo/error.hpp"

namespace monoendo {

BslRewrite bsl_rewrite(const std::vector<int>& word, const CharParam& chi) {
  const DatumPtr& d = chi.datum_ptr();
  for (int i : word)
    if (i < 0 || i >= d->semisimple_rank()) throw InputError("simple index " + std::to_string(i) + " out of range");
  const WeylElt w = WeylElt::from_word(d, word);
  if (w.length() != static_cast<int>(word.size())) throw InputError("word is not reduced");

  // t letters as positive root indices, t_roots.back() leftmost
  std::vector<int> t_roots;
  WeylElt wb = WeylElt::identity(d);
  CharParam cur = chi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int s = *it;
    if (cur.on_coroot(s).numerator() == 0) {
      t_roots.push_back(s);
    } else {
      const WeylElt ws = WeylElt::simple(d, s);
      for (int& a : t_roots) a = ws.root_image(a);
      wb = wb.simple_times(s);
    }
    cur = simple_act(s, cur);
  }

  const ReflectionSubgroup target = w_circ(cur);
  BslRewrite out{{}, Block(chi, wb)};
  MONOENDO_CHECK(out.beta.w_min() == wb, "absorbed part is not the block minimum");
  WeylElt prod = WeylElt::identity(d);
  for (auto it = t_roots.rbegin(); it != t_roots.rend(); ++it) {
    const int pos = target.simple_position(*it);
    MONOENDO_CHECK(pos >= 0, "rewritten letter is not a simple reflection of W°");
    out.t_word.push_back(pos);
    prod = prod * target.generator(pos);
  }
  MONOENDO_CHECK(prod * wb == w, "rewrite does not reproduce w");
  MONOENDO_CHECK(static_cast<int>(out.t_word.size()) == ell_beta(out.beta, w), "rewrite length differs from ell_beta");
  MONOENDO_CHECK(target.length(prod) == static_cast<int>(out.t_word.size()), "rewritten word is not reduced");
  return out;
}

HeckeElt bsl_character(const HeckeAlgebra& h, const std::vector<int>& word, std::size_t k) {
  const WeylGroup& wg = h.weyl();
  for (int i : word)
    if (i < 0 || i >= wg.rank()) throw InputError("simple index " + std::to_string(i) + " out of range");
  HeckeElt x = h.idempotent(k);
  std::size_t cur = k;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::size_t s = wg.left(*it, 0);
    x = h.mul(h.canonical(s, cur), x);
    cur = h.act(s, cur);
  }
  return x;
}

}  // namespace monoendo
