#include "monoendo/hecke.hpp"

#include "monoendo/error.hpp"

namespace monoendo {

namespace {

bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
bool is_zero(const mpq_class& c) { return c == 0; }

template <class C>
void accumulate(std::map<HeckeKey, C>& m, const HeckeKey& k, const C& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }
}

// T_s * a, using T_s T_w 1_L = T_{sw} 1_L if sw > w, else
// v^2 T_{sw} 1_L + [s in W°_{wL}] (v^2 - 1) T_w 1_L.
template <class C>
std::map<HeckeKey, C> left_simple_impl(const HeckeAlgebra& h, int s, const std::map<HeckeKey, C>& a,
                                       const C& v2) {
  const WeylGroup& w = h.weyl();
  const C v2m1 = v2 - C(1);
  std::map<HeckeKey, C> out;
  for (const auto& [k, c] : a) {
    const std::size_t sw = w.left(s, k.first);
    if (w.length(sw) > w.length(k.first)) {
      accumulate(out, {sw, k.second}, c);
    } else {
      accumulate(out, {sw, k.second}, C(v2 * c));
      if (h.simple_in_circ(s, h.act(k.first, k.second))) accumulate(out, k, C(v2m1 * c));
    }
  }
  return out;
}

// T_s^-1 * a = v^-2 T_s a + (v^-2 - 1) e_s a, e_s the sum of 1_M with s in W°_M.
std::map<HeckeKey, LaurentPoly> left_simple_inv(const HeckeAlgebra& h, int s,
                                                const std::map<HeckeKey, LaurentPoly>& a) {
  const LaurentPoly v2 = LaurentPoly::monomial(2);
  const LaurentPoly vm2 = LaurentPoly::monomial(-2);
  const LaurentPoly vm2m1 = vm2 - LaurentPoly(1);
  std::map<HeckeKey, LaurentPoly> out;
  for (const auto& [k, c] : left_simple_impl(h, s, a, v2)) accumulate(out, k, vm2 * c);
  for (const auto& [k, c] : a)
    if (h.simple_in_circ(s, h.act(k.first, k.second))) accumulate(out, k, vm2m1 * c);
  return out;
}

template <class C>
std::map<HeckeKey, C> mul_impl(const HeckeAlgebra& h, const std::map<HeckeKey, C>& a,
                               const std::map<HeckeKey, C>& b, const C& v2) {
  // group b by its left idempotent
  std::map<std::size_t, std::map<HeckeKey, C>> by_left;
  for (const auto& [k, c] : b) by_left[h.act(k.first, k.second)].emplace(k, c);
  std::map<HeckeKey, C> out;
  for (const auto& [ka, ca] : a) {
    auto it = by_left.find(ka.second);
    if (it == by_left.end()) continue;
    std::map<HeckeKey, C> cur = it->second;
    const auto& word = h.weyl().word(ka.first);
    for (auto s = word.rbegin(); s != word.rend(); ++s) cur = left_simple_impl(h, *s, cur, v2);
    for (const auto& [k, c] : cur) accumulate(out, k, C(ca * c));
  }
  return out;
}

}  // namespace

LaurentPoly HeckeElt::coeff(const HeckeKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(const HeckeKey& k, const LaurentPoly& c) { accumulate(terms_, k, c); }

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (alg_ != o.alg_) throw InputError("Hecke elements from different algebras");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (alg_ != o.alg_) throw InputError("Hecke elements from different algebras");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a) {
  HeckeElt r(a.alg_);
  for (const auto& [k, x] : a.terms_) r.add(k, c * x);
  return r;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return a.algebra().mul(a, b); }

HeckeAlgebra::HeckeAlgebra(const CharParam& chi, std::size_t cap)
    : weyl_(chi.datum_ptr(), cap), orbit_(monoendo::orbit(chi, cap)) {
  const std::size_t n = orbit_.size();
  const int r = weyl_.rank();
  act_.resize(weyl_.size() * n);
  for (std::size_t k = 0; k < n; ++k) act_[k] = k;
  for (std::size_t id = 1; id < weyl_.size(); ++id) {
    const int s = weyl_.word(id).front();
    const std::size_t prev = weyl_.left(s, id);
    for (std::size_t k = 0; k < n; ++k) act_[id * n + k] = orbit_.simple_action[s][act_[prev * n + k]];
  }
  in_circ_.resize(static_cast<std::size_t>(r) * n);
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k)
      in_circ_[i * n + k] = orbit_.members[k].on_coroot(i).numerator() == 0;
}

HeckeKey HeckeAlgebra::key(const WeylElt& w, const CharParam& l) const {
  return {weyl_.id_of(w), orbit_.index_of(l)};
}

HeckeElt HeckeAlgebra::one() const {
  HeckeElt r(this);
  for (std::size_t k = 0; k < orbit_.size(); ++k) r.add({0, k}, 1);
  return r;
}

HeckeElt HeckeAlgebra::idempotent(std::size_t k) const { return T(0, k); }

HeckeElt HeckeAlgebra::T(std::size_t w, std::size_t k) const {
  if (w >= weyl_.size() || k >= orbit_.size()) throw InputError("Hecke basis index out of range");
  HeckeElt r(this);
  r.add({w, k}, 1);
  return r;
}

HeckeElt HeckeAlgebra::T_tilde(std::size_t w, std::size_t k) const {
  HeckeElt r(this);
  r.add({w, k}, LaurentPoly::monomial(-weyl_.length(w)));
  return r;
}

HeckeElt HeckeAlgebra::T_inv(std::size_t w, std::size_t k) const {
  std::map<HeckeKey, LaurentPoly> cur = T(0, k).terms();
  // T_w^-1 = T_{s_n}^-1 ... T_{s_1}^-1 for w = s_1 ... s_n
  for (int s : weyl_.word(w)) cur = left_simple_inv(*this, s, cur);
  HeckeElt r(this);
  for (const auto& [key, c] : cur) r.add(key, c);
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  if (a.algebra_ptr() != this || b.algebra_ptr() != this) throw InputError("Hecke elements from different algebras");
  HeckeElt r(this);
  for (const auto& [k, c] : mul_impl(*this, a.terms(), b.terms(), LaurentPoly::monomial(2))) r.add(k, c);
  return r;
}

HeckeElt HeckeAlgebra::left_simple(int s, const HeckeElt& a) const {
  if (a.algebra_ptr() != this) throw InputError("Hecke element from a different algebra");
  HeckeElt r(this);
  for (const auto& [k, c] : left_simple_impl(*this, s, a.terms(), LaurentPoly::monomial(2))) r.add(k, c);
  return r;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
  if (a.algebra_ptr() != this) throw InputError("Hecke element from a different algebra");
  HeckeElt r(this);
  for (const auto& [k, c] : a.terms()) r += c.bar() * T_inv(weyl_.inverse(k.first), k.second);
  return r;
}

const CanonicalColumn& HeckeAlgebra::column(std::size_t k) const {
  std::lock_guard lock(mu_);
  auto it = columns_.find(k);
  if (it != columns_.end()) return *it->second;
  if (k >= orbit_.size()) throw InputError("orbit index out of range");

  const std::size_t n = weyl_.size();
  auto col = std::make_unique<CanonicalColumn>();
  col->r.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t w = 0; w < n; ++w) {
    // bar(Ttilde_w 1_L) = v^{l(w)} T_{w^-1}^-1 1_L
    const HeckeElt b = T_inv(weyl_.inverse(w), k);
    for (const auto& [key, c] : b.terms()) {
      MONOENDO_CHECK(key.second == k, "bar changed the right idempotent");
      col->r[w][key.first] = c.shift(weyl_.length(w) + weyl_.length(key.first));
    }
    MONOENDO_CHECK(col->r[w][w] == LaurentPoly(1), "bar is not unitriangular");
  }
  col->p.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t w = 0; w < n; ++w) {
    auto& p = col->p[w];
    p[w] = 1;
    for (std::size_t x = w; x-- > 0;) {
      LaurentPoly rhs;
      for (std::size_t y = x + 1; y <= w; ++y)
        if (!p[y].is_zero() && !col->r[y][x].is_zero()) rhs += p[y].bar() * col->r[y][x];
      p[x] = rhs.negative_part();
      MONOENDO_CHECK(rhs == p[x] - p[x].bar(), "canonical basis equation is not solvable");
    }
  }
  return *columns_.emplace(k, std::move(col)).first->second;
}

HeckeElt HeckeAlgebra::canonical(std::size_t w, std::size_t k) const {
  const auto& p = column(k).p[w];
  HeckeElt r(this);
  for (std::size_t y = 0; y < p.size(); ++y)
    if (!p[y].is_zero()) r.add({y, k}, p[y].shift(-weyl_.length(y)));
  return r;
}

CanonicalExpansion HeckeAlgebra::to_canonical(const HeckeElt& a) const {
  if (a.algebra_ptr() != this) throw InputError("Hecke element from a different algebra");
  // Ttilde coefficients per right idempotent
  std::map<std::size_t, std::map<std::size_t, LaurentPoly>> cur;
  for (const auto& [k, c] : a.terms()) cur[k.second][k.first] = c.shift(weyl_.length(k.first));
  CanonicalExpansion out;
  for (auto& [l, coeffs] : cur) {
    const auto& p = column(l).p;
    while (!coeffs.empty()) {
      auto top = std::prev(coeffs.end());
      const std::size_t y = top->first;
      const LaurentPoly c = top->second;
      out.emplace(HeckeKey{y, l}, c);
      for (std::size_t x = 0; x <= y; ++x) {
        if (p[y][x].is_zero()) continue;
        LaurentPoly& slot = coeffs[x];
        slot -= c * p[y][x];
        if (slot.is_zero()) coeffs.erase(x);
      }
      MONOENDO_CHECK(!coeffs.count(y), "canonical expansion did not reduce");
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::from_canonical(const CanonicalExpansion& e) const {
  HeckeElt r(this);
  for (const auto& [k, c] : e) r += c * canonical(k.first, k.second);
  return r;
}

CanonicalExpansion HeckeAlgebra::structure_constants(const HeckeKey& a, const HeckeKey& b) const {
  return to_canonical(mul(canonical(a.first, a.second), canonical(b.first, b.second)));
}

ScalarElt HeckeAlgebra::specialize(const HeckeElt& a, const mpq_class& v0) const {
  if (v0 == 0) throw InputError("cannot specialize at v = 0");
  ScalarElt out;
  for (const auto& [k, c] : a.terms()) accumulate(out, k, c.evaluate(v0));
  return out;
}

ScalarElt HeckeAlgebra::mul_specialized(const ScalarElt& a, const ScalarElt& b, const mpq_class& v0) const {
  if (v0 == 0) throw InputError("cannot specialize at v = 0");
  return mul_impl(*this, a, b, mpq_class(v0 * v0));
}

void verify_column(const HeckeAlgebra& h, std::size_t k) {
  const auto& col = h.column(k);
  for (std::size_t w = 0; w < col.p.size(); ++w) {
    for (std::size_t y = 0; y < col.p.size(); ++y) {
      const LaurentPoly& c = col.p[w][y];
      if (y == w) {
        MONOENDO_CHECK(c == LaurentPoly(1), "diagonal coefficient is not 1");
      } else if (!c.is_zero()) {
        MONOENDO_CHECK(c.max_degree() < 0, "off-diagonal coefficient has nonnegative degree");
      }
    }
    const HeckeElt c = h.canonical(w, k);
    MONOENDO_CHECK(h.bar(c) == c, "canonical element is not bar invariant");
  }
}

}  // namespace monoendo
