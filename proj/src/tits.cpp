#include "monoendo/tits.hpp"

#include <cstdlib>
#include <numeric>

#include "monoendo/error.hpp"

namespace monoendo {

IntVec mod2(const IntVec& x) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i], 2);
  return r;
}

namespace {

IntVec add2(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) & 1;
  return a;
}

}  // namespace

TitsElt::TitsElt(WeylElt w, IntVec t) : w_(std::move(w)), t_(mod2(t)) {
  if (static_cast<int>(t_.size()) != w_.datum().rank()) throw InputError("torus part has the wrong rank");
}

TitsElt TitsElt::identity(const DatumPtr& d) { return TitsElt(WeylElt::identity(d), IntVec(d->rank(), 0)); }

TitsElt TitsElt::simple(const DatumPtr& d, int i) { return TitsElt(WeylElt::simple(d, i), IntVec(d->rank(), 0)); }

TitsElt TitsElt::torus(const DatumPtr& d, const IntVec& t) { return TitsElt(WeylElt::identity(d), t); }

TitsElt TitsElt::lift(const WeylElt& w) {
  TitsElt r = identity(w.datum_ptr());
  for (int i : w.reduced_word()) r = r * simple(w.datum_ptr(), i);
  MONOENDO_CHECK(r.t_ == IntVec(r.t_.size(), 0), "lift along a reduced word picked up a torus part");
  return r;
}

TitsElt TitsElt::operator*(const TitsElt& o) const {
  require_same_datum(w_, o.w_);
  IntVec t = add2(add2(t_, mod2(w_.act_cochar(o.t_))), tits_twist(w_, o.w_));
  return TitsElt(w_ * o.w_, std::move(t));
}

TitsElt TitsElt::inverse() const {
  const WeylElt wi = w_.inverse();
  return TitsElt(wi, add2(mod2(wi.act_cochar(t_)), tits_twist(wi, w_)));
}

IntVec tits_twist(const WeylElt& u, const WeylElt& w) {
  require_same_datum(u, w);
  const RootDatum& d = u.datum();
  const WeylElt ui = u.inverse(), uwi = (u * w).inverse();
  IntVec t(d.rank(), 0);
  for (int a = 0; a < d.num_positive(); ++a)
    if (!d.is_positive(ui.root_image(a)) && d.is_positive(uwi.root_image(a))) t = add2(t, mod2(d.coroot(a)));
  return t;
}

IntVec tits_twist_stepwise(const WeylElt& u, const WeylElt& w) {
  // x-dot s-dot = (xs)-dot if xs > x, else (xs)-dot alpha_s^vee(-1) = (xs)(alpha_s^vee)(-1) (xs)-dot
  require_same_datum(u, w);
  const RootDatum& d = u.datum();
  IntVec t(d.rank(), 0);
  WeylElt x = u;
  for (int s : w.reduced_word()) {
    const bool down = x.has_right_descent(s);
    x = x.times_simple(s);
    if (down) t = add2(t, mod2(x.act_cochar(d.coroot(s))));
  }
  return t;
}

TitsElt tits_lift(const WeylElt& w) { return TitsElt::lift(w); }

IntVec cocycle_c_rebased(const Block& gamma, const Block& beta, const IntVec& f_gamma, const IntVec& f_beta,
                         const IntVec& f_gamma_beta) {
  if (!(gamma.source() == beta.target())) throw InputError("blocks are not composable");
  const Block gb = block_mul(gamma, beta);
  const DatumPtr& d = beta.source().datum_ptr();
  auto lift = [&](const Block& b, const IntVec& f) { return TitsElt::torus(d, f) * tits_lift(b.w_min()); };
  const TitsElt r = lift(gb, f_gamma_beta).inverse() * lift(gamma, f_gamma) * lift(beta, f_beta);
  MONOENDO_CHECK(r.weyl().is_identity(), "cocycle has a nontrivial Weyl part");
  return r.torus_part();
}

IntVec cocycle_c(const Block& gamma, const Block& beta) {
  const IntVec z(beta.source().datum().rank(), 0);
  const IntVec c = cocycle_c_rebased(gamma, beta, z, z, z);
  // closed form: (w^{gamma beta})^-1 tau(w^gamma, w^beta)
  const WeylElt w = gamma.w_min() * beta.w_min();
  MONOENDO_CHECK(c == mod2(w.inverse().act_cochar(tits_twist(gamma.w_min(), beta.w_min()))),
                 "cocycle disagrees with its closed form");
  return c;
}

LambdaValue lambda_value(const CharParam& chi, std::int64_t q, const IntVec& c) {
  if (q < 2 || !is_prime_power(q)) throw InputError("q must be a prime power");
  if (q % 2 == 0) return {Rat(0), "q is even: T(F_q) has no 2-torsion"};
  if ((q - 1) % chi.order() != 0)
    throw InputError("order of the parameter (" + std::to_string(chi.order()) + ") does not divide q - 1");
  const Rat x = chi.evaluate(c) * Rat((q - 1) / 2);
  return {Rat(mod_floor(x.numerator(), x.denominator()), x.denominator()), ""};
}

std::size_t default_omega_cap() {
  if (const char* env = std::getenv("MONOENDO_OMEGA_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 16;
}

std::int64_t TwistingData::denominator() const {
  std::int64_t m = 1;
  for (const auto& row : lambda)
    for (const Rat& x : row) m = std::lcm(m, x.denominator());
  return m;
}

TwistingData twisting_data(const CharParam& chi, std::int64_t q, std::vector<IntVec> rebase) {
  TwistingData t;
  t.chi = chi;
  t.q = q;
  t.omega = stabilizer_and_omega(chi).omega;
  const int m = t.omega.order();
  const int r = chi.datum().rank();
  if (rebase.empty()) rebase.assign(m, IntVec(r, 0));
  if (static_cast<int>(rebase.size()) != m) throw InputError("rebase needs one torus part per element of Omega_L");
  for (auto& f : rebase) {
    if (static_cast<int>(f.size()) != r) throw InputError("rebase torus part has the wrong rank");
    f = mod2(f);
  }
  t.rebase = rebase;
  std::vector<Block> bl;
  for (const auto& w : t.omega.reps) bl.emplace_back(chi, w);
  t.c.assign(m, std::vector<IntVec>(m));
  t.lambda.assign(m, std::vector<Rat>(m));
  for (int g = 0; g < m; ++g)
    for (int b = 0; b < m; ++b) {
      const int gb = t.omega.table[g][b];
      MONOENDO_CHECK(block_mul(bl[g], bl[b]).w_min() == t.omega.reps[gb], "Omega_L table disagrees with blocks");
      t.c[g][b] = cocycle_c_rebased(bl[g], bl[b], rebase[g], rebase[b], rebase[gb]);
      const LambdaValue lv = lambda_value(chi, q, t.c[g][b]);
      t.lambda[g][b] = lv.value;
      t.note = lv.note;
    }
  return t;
}

std::optional<Trivialization> trivialize_class(const TwistingData& t, std::size_t cap) {
  const int m = t.omega.order();
  if (static_cast<std::size_t>(m) > cap)
    throw SizeError("|Omega_L| = " + std::to_string(m) + " exceeds the cap " + std::to_string(cap));
  const std::int64_t base = t.denominator();
  for (const std::int64_t den : {base, 2 * base}) {
    // u_g + u_b - u_{gb} = den * lambda(g, b)  (mod den)
    IntMat a(m * m, m);
    IntVec rhs(m * m);
    for (int g = 0; g < m; ++g)
      for (int b = 0; b < m; ++b) {
        const int row = g * m + b;
        a(row, g) += 1;
        a(row, b) += 1;
        a(row, t.omega.table[g][b]) -= 1;
        const Rat x = t.lambda[g][b] * Rat(den);
        MONOENDO_CHECK(x.denominator() == 1, "lambda does not fit the denominator");
        rhs[row] = x.numerator();
      }
    if (auto u = solve_mod(a, rhs, den)) {
      Trivialization tr;
      tr.denominator = den;
      for (int g = 0; g < m; ++g) tr.mu.emplace_back((*u)[g], den);
      return tr;
    }
  }
  return std::nullopt;
}

}  // namespace monoendo
