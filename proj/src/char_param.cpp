#include "monoendo/char_param.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "monoendo/error.hpp"

namespace monoendo {

// ---------------------------------------------------------------- CharParam

CharParam::CharParam(DatumPtr d, const RatVec& values) : datum_(std::move(d)) {
  if (static_cast<int>(values.size()) != datum_->rank())
    throw InputError("character parameter needs " + std::to_string(datum_->rank()) +
                     " values, got " + std::to_string(values.size()));
  order_ = lcm_denominator(values);
  for (const Rat& v : values) num_.push_back(mod_floor(v.numerator() * (order_ / v.denominator()), order_));
  // Reduce N when all numerators share a factor with it.
  std::int64_t g = order_;
  for (auto x : num_) g = std::gcd(g, x);
  if (g > 1) {
    order_ /= g;
    for (auto& x : num_) x /= g;
  }
}

CharParam CharParam::trivial(const DatumPtr& d) { return CharParam(d, RatVec(d->rank(), Rat(0))); }

CharParam CharParam::parse(const DatumPtr& d, const std::vector<std::string>& values) {
  RatVec v;
  for (const auto& s : values) v.push_back(parse_rat(s));
  return CharParam(d, v);
}

RatVec CharParam::values() const {
  RatVec r;
  for (std::size_t k = 0; k < num_.size(); ++k) r.push_back(value(static_cast<int>(k)));
  return r;
}

Rat CharParam::evaluate(const IntVec& cochar) const {
  MONOENDO_CHECK(cochar.size() == num_.size(), "cocharacter has wrong length");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < num_.size(); ++k) s = mod_floor(s + num_[k] * mod_floor(cochar[k], order_), order_);
  return Rat(s, order_);
}

CharParam CharParam::scaled(std::int64_t k) const {
  RatVec v;
  for (auto x : num_) v.emplace_back(mod_floor(x * mod_floor(k, order_), order_), order_);
  return CharParam(datum_, v);
}

bool CharParam::operator<(const CharParam& o) const {
  const auto a = values(), b = o.values();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t CharParam::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(order_);
  for (auto x : num_) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
  return h;
}

std::vector<std::string> CharParam::to_strings() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    out.push_back(rat_to_string(value(static_cast<int>(k))));
  }
  return out;
}

std::string CharParam::to_string() const {
  std::string s = "(";
  const auto parts = to_strings();
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : "") + parts[k];
  return s + ")";
}

CharParam w_act(const WeylElt& w, const CharParam& chi) {
  if (w.datum_ptr() != chi.datum_ptr()) throw InputError("Weyl element and parameter have different data");
  const IntMat inv = w.inverse().matrix();
  const int r = chi.datum().rank();
  RatVec v(r, Rat(0));
  for (int k = 0; k < r; ++k) {
    std::int64_t s = 0;
    for (int j = 0; j < r; ++j) s += chi.numerators()[j] * inv(j, k);
    v[k] = Rat(mod_floor(s, chi.order()), chi.order());
  }
  return CharParam(chi.datum_ptr(), v);
}

CharParam simple_act(int s, const CharParam& chi) {
  const IntMat& m = chi.datum().simple_reflection_matrix(s);
  const int r = chi.datum().rank();
  RatVec v(r, Rat(0));
  for (int k = 0; k < r; ++k) {
    std::int64_t t = 0;
    for (int j = 0; j < r; ++j) t += chi.numerators()[j] * m(j, k);
    v[k] = Rat(mod_floor(t, chi.order()), chi.order());
  }
  return CharParam(chi.datum_ptr(), v);
}

RootSet phi_L(const CharParam& chi) {
  const RootDatum& d = chi.datum();
  RootSet s(d.num_roots());
  for (int a = 0; a < d.num_roots(); ++a)
    if (chi.on_coroot(a).numerator() == 0) s.set(a);
  return s;
}

ReflectionSubgroup w_circ(const CharParam& chi) {
  const RootSet all = phi_L(chi);
  RootSet pos(chi.datum().num_positive());
  for (int a = 0; a < chi.datum().num_positive(); ++a) pos[a] = all[a];
  return ReflectionSubgroup(chi.datum_ptr(), pos);
}

// ---------------------------------------------------------------- alcove engine

namespace {

// A point of the weight space, written by its values on the simple coroots.
using Coords = RatVec;

Coords coords_of(const CharParam& chi) {
  Coords a;
  for (int i = 0; i < chi.datum().semisimple_rank(); ++i) a.push_back(chi.on_coroot(i));
  return a;
}

// (u y)(alpha_i^vee) = y(u^-1 alpha_i^vee).
Coords act_on_coords(const WeylElt& u, const Coords& y) {
  const RootDatum& d = u.datum();
  const int n = d.semisimple_rank();
  std::vector<int> pre(d.num_roots());
  for (int b = 0; b < d.num_roots(); ++b) pre[u.root_image(b)] = b;
  Coords out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    const IntVec& c = d.coroot_coeffs(pre[i]);
    for (int k = 0; k < n; ++k) out[i] += y[k] * c[k];
  }
  return out;
}

struct ComponentData {
  std::vector<int> nodes;
  int theta = -1;  // root whose coroot is the highest coroot
  IntVec theta_coeffs;
  std::vector<int> special;  // nodes with coefficient 1 in the highest coroot
  std::vector<WeylElt> u_special;  // parallel to special
};

WeylElt parabolic_longest(const DatumPtr& d, const std::vector<int>& nodes) {
  WeylElt w = WeylElt::identity(d);
  for (std::size_t k = 0; k < nodes.size();) {
    if (!w.has_right_descent(nodes[k])) {
      w = w.times_simple(nodes[k]);
      k = 0;
    } else {
      ++k;
    }
  }
  return w;
}

std::vector<ComponentData> component_data(const DatumPtr& d) {
  std::vector<ComponentData> out;
  for (const auto& comp : d->components()) {
    ComponentData c;
    c.nodes = comp.nodes;
    std::sort(c.nodes.begin(), c.nodes.end());
    int best = -1;
    std::int64_t best_h = -1;
    for (int a = 0; a < d->num_positive(); ++a) {
      const IntVec& cc = d->coroot_coeffs(a);
      bool inside = true;
      std::int64_t h = 0;
      for (int i = 0; i < d->semisimple_rank(); ++i) {
        if (cc[i] != 0 && d->component_of(i) != d->component_of(c.nodes[0])) inside = false;
        h += cc[i];
      }
      if (inside && h > best_h) {
        best_h = h;
        best = a;
      }
    }
    c.theta = best;
    c.theta_coeffs = d->coroot_coeffs(best);
    const WeylElt w0 = parabolic_longest(d, c.nodes);
    for (int j : c.nodes) {
      if (c.theta_coeffs[j] != 1) continue;
      std::vector<int> rest;
      for (int v : c.nodes)
        if (v != j) rest.push_back(v);
      c.special.push_back(j);
      c.u_special.push_back(parabolic_longest(d, rest) * w0);
    }
    out.push_back(std::move(c));
  }
  return out;
}

struct Normalized {
  Coords x;   // in the closed fundamental alcove
  WeylElt u;  // x = u chi + (root lattice translation)
};

Normalized normalize(const CharParam& chi, const std::vector<ComponentData>& comps) {
  const RootDatum& d = chi.datum();
  const int n = d.semisimple_rank();
  Normalized r{coords_of(chi), WeylElt::identity(chi.datum_ptr())};
  const IntMat& a = d.cartan();
  for (std::size_t guard = 0;; ++guard) {
    MONOENDO_CHECK(guard < 1000000, "alcove walk does not terminate");
    int neg = -1;
    for (int i = 0; i < n && neg < 0; ++i)
      if (r.x[i] < Rat(0)) neg = i;
    if (neg >= 0) {
      const Rat ai = r.x[neg];
      for (int j = 0; j < n; ++j) r.x[j] -= ai * a(neg, j);
      r.u = WeylElt::simple(chi.datum_ptr(), neg) * r.u;
      continue;
    }
    bool moved = false;
    for (const auto& c : comps) {
      Rat h = 0;
      for (int j : c.nodes) h += r.x[j] * c.theta_coeffs[j];
      if (h <= Rat(1)) continue;
      const IntVec& theta = d.root(c.theta);
      for (int j = 0; j < n; ++j) r.x[j] -= (h - 1) * dot(theta, d.coroot(j));
      r.u = WeylElt::reflection(chi.datum_ptr(), c.theta) * r.u;
      moved = true;
      break;
    }
    if (!moved) return r;
  }
}

// Linear parts u of elements of Omega_P sending x1 to x2 (both in the closed
// fundamental alcove); one entry per combination across components.
std::vector<WeylElt> omega_links(const DatumPtr& d, const std::vector<ComponentData>& comps,
                                 const Coords& x1, const Coords& x2) {
  std::vector<WeylElt> acc{WeylElt::identity(d)};
  for (const auto& c : comps) {
    std::vector<WeylElt> options;
    auto matches = [&](const Coords& y) {
      for (int j : c.nodes)
        if (y[j] != x2[j]) return false;
      return true;
    };
    if (matches(x1)) options.push_back(WeylElt::identity(d));
    for (std::size_t k = 0; k < c.special.size(); ++k) {
      Coords y = act_on_coords(c.u_special[k], x1);
      y[c.special[k]] += 1;
      if (matches(y)) options.push_back(c.u_special[k]);
    }
    std::vector<WeylElt> next;
    for (const auto& p : acc)
      for (const auto& o : options) next.push_back(p * o);
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

}  // namespace

std::vector<WeylElt> transporter_min_reps(const CharParam& from, const CharParam& to) {
  if (from.datum_ptr() != to.datum_ptr()) throw InputError("parameters have different root data");
  const DatumPtr& d = from.datum_ptr();
  const auto comps = component_data(d);
  const Normalized n1 = normalize(from, comps), n2 = normalize(to, comps);
  const ReflectionSubgroup circ = w_circ(from);
  const WeylElt u2inv = n2.u.inverse();
  std::vector<WeylElt> out;
  std::unordered_map<std::vector<int>, bool, IntSeqHash> seen;
  for (const WeylElt& link : omega_links(d, comps, n1.x, n2.x)) {
    const WeylElt w = u2inv * link * n1.u;
    if (!(w_act(w, from) == to)) continue;
    WeylElt m = circ.min_coset_rep(w);
    if (seen.emplace(m.perm(), true).second) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<WeylElt> find_transporter(const CharParam& from, const CharParam& to) {
  auto reps = transporter_min_reps(from, to);
  if (reps.empty()) return std::nullopt;
  return reps.front();
}

// ---------------------------------------------------------------- Omega

int OmegaGroup::index_of(const WeylElt& min_rep) const {
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (reps[k] == min_rep) return static_cast<int>(k);
  return -1;
}

int OmegaGroup::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (table[a][b] == 0) return b;
  throw InternalError("Omega element without inverse");
}

bool OmegaGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

std::vector<int> OmegaGroup::invariant_factors() const {
  MONOENDO_CHECK(is_abelian(), "invariant factors of a nonabelian group");
  const int n = order();
  auto power = [&](int g, int m) {
    int x = 0;
    for (int k = 0; k < m; ++k) x = table[x][g];
    return x;
  };
  std::map<int, std::vector<int>> exps;  // prime -> exponents, descending
  int rest = n;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // c[i] = log_p #{g : g^{p^i} = 1}
    std::vector<int> c(e + 1, 0);
    int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      int cnt = 0;
      for (int g = 0; g < n; ++g)
        if (power(g, pk) == 0) ++cnt;
      int lg = 0;
      while (cnt % p == 0 && cnt > 1) {
        cnt /= p;
        ++lg;
      }
      c[i] = lg;
    }
    // number of cyclic factors of exponent >= i is c[i] - c[i-1]
    std::vector<int> ge(e + 2, 0);
    for (int i = 1; i <= e; ++i) ge[i] = c[i] - c[i - 1];
    std::vector<int> list;
    for (int i = e; i >= 1; --i) {
      const int exactly = ge[i] - ge[i + 1];
      for (int k = 0; k < exactly; ++k) list.push_back(i);
    }
    exps[p] = list;
  }
  std::size_t len = 0;
  for (auto& [p, l] : exps) len = std::max(len, l.size());
  std::vector<int> out(len, 1);
  for (auto& [p, l] : exps)
    for (std::size_t k = 0; k < l.size(); ++k)
      for (int i = 0; i < l[k]; ++i) out[k] *= p;
  std::reverse(out.begin(), out.end());
  return out;
}

std::string OmegaGroup::structure() const {
  if (order() == 1) return "1";
  if (!is_abelian()) return "nonabelian of order " + std::to_string(order());
  std::string s;
  for (int f : invariant_factors()) s += (s.empty() ? "" : "x") + ("Z/" + std::to_string(f));
  return s;
}

Stabilizer stabilizer_and_omega(const CharParam& chi) {
  Stabilizer st{w_circ(chi), {}};
  auto reps = transporter_min_reps(chi, chi);
  MONOENDO_CHECK(!reps.empty() && reps.front().is_identity(), "stabilizer misses the identity");
  st.omega.reps = std::move(reps);
  const int n = st.omega.order();
  st.omega.table.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const WeylElt m = st.w_circ.min_coset_rep(st.omega.reps[a] * st.omega.reps[b]);
      st.omega.table[a][b] = st.omega.index_of(m);
      MONOENDO_CHECK(st.omega.table[a][b] >= 0, "Omega is not closed");
    }
  // W°_L is normal in W_L and Phi_L is W_L-stable.
  const RootSet phi = phi_L(chi);
  for (const auto& r : st.omega.reps) {
    for (int a = 0; a < chi.datum().num_roots(); ++a)
      MONOENDO_CHECK(phi[a] == phi[r.root_image(a)], "Phi_L is not W_L-stable");
    const WeylElt rinv = r.inverse();
    for (int k = 0; k < st.w_circ.rank(); ++k)
      MONOENDO_CHECK(st.w_circ.contains(r * st.w_circ.generator(k) * rinv), "W°_L is not normal");
  }
  return st;
}

DatumPtr subgroup_datum(const ReflectionSubgroup& g) {
  const RootDatum& d = *g.datum();
  IntMat sr(g.rank(), d.rank()), sc(g.rank(), d.rank());
  for (int k = 0; k < g.rank(); ++k)
    for (int t = 0; t < d.rank(); ++t) {
      sr(k, t) = d.root(g.simple_roots()[k])[t];
      sc(k, t) = d.coroot(g.simple_roots()[k])[t];
    }
  return RootDatum::from_simple(sr, sc);
}

DatumPtr endoscopic_datum(const CharParam& chi) { return subgroup_datum(w_circ(chi)); }

// ---------------------------------------------------------------- orbits

std::size_t OrbitData::index_of(const CharParam& c) const {
  auto it = index.find(c);
  if (it == index.end()) throw InputError("parameter " + c.to_string() + " is not in the orbit");
  return it->second;
}

std::size_t OrbitData::act(const WeylElt& w, std::size_t k) const {
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) k = simple_action[*it][k];
  return k;
}

std::uint64_t orbit_size(const CharParam& chi) {
  return chi.datum().weyl_group_order() / stabilizer_and_omega(chi).order();
}

OrbitData orbit(const CharParam& chi, std::size_t cap) {
  const auto expected = orbit_size(chi);
  if (expected > cap)
    throw SizeError("orbit of size " + std::to_string(expected) + " exceeds cap " + std::to_string(cap));
  const int n = chi.datum().semisimple_rank();
  OrbitData o;
  o.members.push_back(chi);
  o.index.emplace(chi, 0);
  o.transport_words.emplace_back();
  for (std::size_t k = 0; k < o.members.size(); ++k)
    for (int s = 0; s < n; ++s) {
      CharParam c = simple_act(s, o.members[k]);
      if (o.index.count(c)) continue;
      o.index.emplace(c, o.members.size());
      std::vector<int> w{s};
      w.insert(w.end(), o.transport_words[k].begin(), o.transport_words[k].end());
      o.members.push_back(std::move(c));
      o.transport_words.push_back(std::move(w));
    }
  MONOENDO_CHECK(o.members.size() == expected, "orbit size disagrees with |W|/|W_L|");
  o.simple_action.assign(n, std::vector<std::size_t>(o.size()));
  for (int s = 0; s < n; ++s)
    for (std::size_t k = 0; k < o.size(); ++k) o.simple_action[s][k] = o.index.at(simple_act(s, o.members[k]));
  return o;
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

std::string q_compatibility(const CharParam& chi, std::int64_t q) {
  if (!is_prime_power(q)) return "q = " + std::to_string(q) + " is not a prime power";
  if (std::gcd(q, chi.order()) != 1)
    return "gcd(q, N) = " + std::to_string(std::gcd(q, chi.order())) + " for N = " + std::to_string(chi.order()) +
           "; the parameter is not a character of a finite torus over F_q";
  return {};
}

}  // namespace monoendo
