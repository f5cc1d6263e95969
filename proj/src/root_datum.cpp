#include "monoendo/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "monoendo/error.hpp"

namespace monoendo {

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

std::size_t IntSeqHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- Cartan types

std::string CartanComponent::label() const { return std::string(1, letter) + std::to_string(rank); }

std::vector<std::pair<char, int>> parse_cartan_type(std::string_view type) {
  std::vector<std::pair<char, int>> out;
  std::string s;
  for (char c : type)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty Cartan type");
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char letter = s[pos++];
    if (letter < 'A' || letter > 'G') throw InputError("unknown Cartan type letter in '" + s + "'");
    if (pos < s.size() && s[pos] == '_') ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InputError("missing rank in Cartan type '" + s + "'");
    const int n = std::stoi(s.substr(start, pos - start));
    bool ok = n >= 1;
    switch (letter) {
      case 'D': ok = n >= 2; break;
      case 'E': ok = n >= 6 && n <= 8; break;
      case 'F': ok = n == 4; break;
      case 'G': ok = n == 2; break;
      default: break;
    }
    if (!ok) throw InputError("unsupported Cartan type " + std::string(1, letter) + std::to_string(n));
    out.emplace_back(letter, n);
    if (pos < s.size()) {
      if (s[pos] == 'x' || s[pos] == '*') {
        ++pos;
      } else if (s.compare(pos, 2, "\xC3\x97") == 0) {  // U+00D7
        pos += 2;
      } else {
        throw InputError("bad separator in Cartan type '" + s + "'");
      }
      if (pos == s.size()) throw InputError("trailing separator in Cartan type '" + s + "'");
    }
  }
  return out;
}

namespace {

void irreducible_cartan(IntMat& a, int off, char letter, int n) {
  auto edge = [&](int i, int j) {
    a(off + i, off + j) = -1;
    a(off + j, off + i) = -1;
  };
  for (int i = 0; i < n; ++i) a(off + i, off + i) = 2;
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      if (n >= 2) a(off + n - 2, off + n - 1) = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      if (n >= 2) a(off + n - 1, off + n - 2) = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      if (n >= 3) edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      a(off + 1, off + 2) = -2;
      break;
    case 'G':
      edge(0, 1);
      a(off + 1, off + 0) = -3;
      break;
    default:
      throw InputError("unknown Cartan type letter");
  }
}

}  // namespace

IntMat cartan_matrix(std::string_view type) {
  const auto parts = parse_cartan_type(type);
  int total = 0;
  for (auto& [l, n] : parts) total += n;
  IntMat a(total, total);
  int off = 0;
  for (auto& [l, n] : parts) {
    irreducible_cartan(a, off, l, n);
    off += n;
  }
  return a;
}

namespace {

[[noreturn]] void not_finite() { throw InputError("Cartan matrix is not of finite type"); }

CartanComponent classify(const IntMat& a, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  auto adj = [&](int u, int v) { return a(u, v) != 0; };
  auto neighbours = [&](int u) {
    std::vector<int> r;
    for (int v : nodes)
      if (v != u && adj(u, v)) r.push_back(v);
    return r;
  };
  // u is longer than v when <alpha_u, alpha_v^vee> has the larger magnitude.
  auto longer = [&](int u, int v) { return std::llabs(a(u, v)) > std::llabs(a(v, u)); };

  CartanComponent c;
  c.rank = n;
  if (n == 1) {
    c.letter = 'A';
    c.nodes = nodes;
    return c;
  }
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj(nodes[i], nodes[j])) ++edges;
  if (edges != n - 1) not_finite();  // a tree

  // Walk from `start` away from `prev` until a leaf.
  auto arm = [&](int prev, int start) {
    std::vector<int> r{start};
    while (true) {
      auto nb = neighbours(r.back());
      std::erase(nb, prev);
      if (nb.empty()) break;
      if (nb.size() > 1) not_finite();
      prev = r.back();
      r.push_back(nb[0]);
    }
    return r;
  };

  int branch = -1;
  for (int u : nodes) {
    const auto d = neighbours(u).size();
    if (d > 3) not_finite();
    if (d == 3) {
      if (branch >= 0) not_finite();
      branch = u;
    }
  }
  if (branch >= 0) {
    for (int u : nodes)
      for (int v : nodes)
        if (u != v && a(u, v) != 0 && a(u, v) != -1) not_finite();
    std::vector<std::vector<int>> arms;
    for (int v : neighbours(branch)) arms.push_back(arm(branch, v));
    std::stable_sort(arms.begin(), arms.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    const std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
    if (l0 == 1 && l1 == 1) {
      c.letter = 'D';
      // long arm from its far end, then branch, then the two leaves
      for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) c.nodes.push_back(*it);
      c.nodes.push_back(branch);
      c.nodes.push_back(arms[0][0]);
      c.nodes.push_back(arms[1][0]);
      return c;
    }
    if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
      c.letter = 'E';
      c.nodes = {arms[1][1], arms[0][0], arms[1][0], branch};
      for (int v : arms[2]) c.nodes.push_back(v);
      return c;
    }
    not_finite();
  }

  // A path.
  std::vector<int> ends;
  for (int u : nodes)
    if (neighbours(u).size() == 1) ends.push_back(u);
  if (ends.size() != 2) not_finite();
  std::vector<int> path = arm(-1, std::min(ends[0], ends[1]));
  int multi = -1;  // position p with a multiple edge between path[p], path[p+1]
  for (int p = 0; p + 1 < n; ++p) {
    const auto x = a(path[p], path[p + 1]) * a(path[p + 1], path[p]);
    if (x == 1) continue;
    if (x < 1 || x > 3 || multi >= 0) not_finite();
    multi = p;
  }
  if (multi < 0) {
    c.letter = 'A';
    c.nodes = path;
    return c;
  }
  const auto prod = a(path[multi], path[multi + 1]) * a(path[multi + 1], path[multi]);
  if (prod == 3) {
    if (n != 2) not_finite();
    c.letter = 'G';
    c.nodes = longer(path[0], path[1]) ? std::vector<int>{path[1], path[0]} : path;
    return c;
  }
  if (n == 2) {
    // Same root system; the label follows root lengths in index order.
    c.letter = longer(path[0], path[1]) ? 'B' : 'C';
    c.nodes = path;
    return c;
  }
  if (n == 4 && multi == 1) {
    c.letter = 'F';
    c.nodes = longer(path[1], path[2]) ? path : std::vector<int>(path.rbegin(), path.rend());
    return c;
  }
  if (multi != 0 && multi != n - 2) not_finite();
  if (multi == 0) std::reverse(path.begin(), path.end());
  c.nodes = path;
  c.letter = longer(path[n - 1], path[n - 2]) ? 'C' : 'B';
  return c;
}

}  // namespace

std::vector<CartanComponent> identify_cartan(const IntMat& a) {
  const int n = a.rows();
  if (a.cols() != n) throw InputError("Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 2) not_finite();
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) not_finite();
      if ((a(i, j) == 0) != (a(j, i) == 0)) not_finite();
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<CartanComponent> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = s;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && a(nodes[k], v) != 0) {
          comp[v] = s;
          nodes.push_back(v);
        }
    std::sort(nodes.begin(), nodes.end());
    CartanComponent c = classify(a, nodes);
    // Compare against the reference matrix in Bourbaki numbering.
    IntMat ref(c.rank, c.rank);
    irreducible_cartan(ref, 0, c.letter, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        if (ref(i, j) != a(c.nodes[i], c.nodes[j])) not_finite();
    out.push_back(std::move(c));
  }
  return out;
}

std::string cartan_label(const std::vector<CartanComponent>& comps) {
  if (comps.empty()) return "torus";
  std::string s;
  for (const auto& c : comps) {
    if (!s.empty()) s += "x";
    s += c.label();
  }
  return s;
}

std::uint64_t weyl_order(const std::vector<CartanComponent>& comps) {
  std::uint64_t total = 1;
  for (const auto& c : comps) {
    std::uint64_t f = 1;
    for (int k = 2; k <= c.rank; ++k) f *= static_cast<std::uint64_t>(k);
    std::uint64_t o = 0;
    switch (c.letter) {
      case 'A': o = f * static_cast<std::uint64_t>(c.rank + 1); break;
      case 'B':
      case 'C': o = f << c.rank; break;
      case 'D': o = f << (c.rank - 1); break;
      case 'E': o = c.rank == 6 ? 51840ull : c.rank == 7 ? 2903040ull : 696729600ull; break;
      case 'F': o = 1152; break;
      case 'G': o = 12; break;
      default: throw InternalError("unknown component letter");
    }
    total *= o;
  }
  return total;
}

// ---------------------------------------------------------------- RootDatum

namespace {

// Rational simple-coroot coordinates of a standard basis of X_* for C_n.
void symplectic_basis(RatMat& b, const CartanComponent& c) {
  for (int i = 0; i < c.rank; ++i) {
    for (int j = 0; j < c.rank; ++j) b(c.nodes[i], c.nodes[j]) = 0;
    for (int j = i; j < c.rank; ++j) b(c.nodes[i], c.nodes[j]) = 1;
  }
}

}  // namespace

DatumPtr RootDatum::from_cartan(std::string_view type, Isogeny iso) {
  const IntMat a = cartan_matrix(type);
  const int n = a.rows();
  RatMat basis;
  if (iso == Isogeny::simply_connected) {
    basis = RatMat::identity(n);
    for (const auto& c : identify_cartan(a))
      if (c.letter == 'C' && c.rank >= 2) symplectic_basis(basis, c);
  } else if (iso == Isogeny::adjoint) {
    auto inv = inverse(to_rat(a).transpose());
    MONOENDO_CHECK(inv.has_value(), "Cartan matrix is singular");
    basis = *inv;
  } else {
    throw InputError("custom isogeny needs explicit lattice rows");
  }
  auto d = lattice_impl(type, basis);
  d->description_ =
      std::string(type) + (iso == Isogeny::simply_connected ? " simply_connected" : " adjoint");
  return d;
}

DatumPtr RootDatum::from_lattice(std::string_view type, const RatMat& basis_rows) {
  return lattice_impl(type, basis_rows);
}

std::shared_ptr<RootDatum> RootDatum::lattice_impl(std::string_view type, const RatMat& basis_rows) {
  const IntMat a = cartan_matrix(type);
  const int n = a.rows();
  if (basis_rows.rows() != n || basis_rows.cols() != n)
    throw InputError("lattice must have " + std::to_string(n) + " rows of length " +
                     std::to_string(n));
  auto binv = inverse(basis_rows);
  if (!binv) throw InputError("lattice rows are linearly dependent");
  IntMat coroots, roots;
  try {
    coroots = to_int(*binv);
  } catch (const InputError&) {
    throw InputError("lattice does not contain the coroot lattice");
  }
  try {
    roots = to_int(to_rat(a) * basis_rows.transpose());
  } catch (const InputError&) {
    throw InputError("lattice is not contained in the coweight lattice");
  }
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->build(roots, coroots);
  d->basis_rows_ = basis_rows;
  d->description_ = std::string(type) + " custom lattice";
  return d;
}

DatumPtr RootDatum::from_simple(const IntMat& simple_roots, const IntMat& simple_coroots) {
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->build(simple_roots, simple_coroots);
  d->description_ = "explicit root datum";
  return d;
}

void RootDatum::build(const IntMat& sr, const IntMat& sc) {
  if (sr.rows() != sc.rows() || sr.cols() != sc.cols())
    throw InputError("simple roots and coroots must have matching shapes");
  rank_ = sr.cols();
  const int n = sr.rows();
  if (n > 0 && (rank_of(to_rat(sr)) != n || rank_of(to_rat(sc)) != n))
    throw InputError("simple roots or coroots are linearly dependent");
  cartan_ = IntMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_(i, j) = dot(sr.row(i), sc.row(j));
  components_ = identify_cartan(cartan_);
  node_component_.assign(n, -1);
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (int v : components_[c].nodes) node_component_[v] = static_cast<int>(c);

  struct R {
    IntVec root, coroot, rc, cc;
  };
  std::vector<R> pos;
  std::unordered_map<IntVec, int, IntVecHash> seen;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.emplace(sr.row(i), static_cast<int>(pos.size()));
    pos.push_back({sr.row(i), sc.row(i), e, e});
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      if (k == static_cast<std::size_t>(i)) continue;
      R r = pos[k];
      const auto c = dot(r.root, sc.row(i));
      const auto cv = dot(sr.row(i), r.coroot);
      if (c == 0 && cv == 0) continue;
      for (int t = 0; t < rank_; ++t) {
        r.root[t] -= c * sr(i, t);
        r.coroot[t] -= cv * sc(i, t);
      }
      r.rc[i] -= c;
      r.cc[i] -= cv;
      if (seen.count(r.root)) continue;
      seen.emplace(r.root, static_cast<int>(pos.size()));
      pos.push_back(std::move(r));
    }
  }
  auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::stable_sort(pos.begin(), pos.end(), [&](const R& x, const R& y) {
    const auto hx = height(x.rc), hy = height(y.rc);
    if (hx != hy) return hx < hy;
    return x.rc > y.rc;
  });
  num_pos_ = static_cast<int>(pos.size());
  auto neg = [](IntVec v) {
    for (auto& x : v) x = -x;
    return v;
  };
  for (const auto& r : pos) {
    for (auto x : r.rc) MONOENDO_CHECK(x >= 0, "positive root with negative coefficient");
    roots_.push_back(r.root);
    coroots_.push_back(r.coroot);
    root_coeffs_.push_back(r.rc);
    coroot_coeffs_.push_back(r.cc);
  }
  for (int a = 0; a < num_pos_; ++a) {
    roots_.push_back(neg(roots_[a]));
    coroots_.push_back(neg(coroots_[a]));
    root_coeffs_.push_back(neg(root_coeffs_[a]));
    coroot_coeffs_.push_back(neg(coroot_coeffs_[a]));
  }
  for (int a = 0; a < 2 * num_pos_; ++a) {
    MONOENDO_CHECK(dot(roots_[a], coroots_[a]) == 2, "<alpha, alpha^vee> != 2");
    root_lookup_.emplace(roots_[a], a);
    coroot_lookup_.emplace(coroots_[a], a);
    coeff_lookup_.emplace(root_coeffs_[a], a);
  }
  for (int i = 0; i < n; ++i) {
    simple_mats_.push_back(reflection_matrix(i));
    simple_perms_.push_back(reflection_perm(i));
  }
}

int RootDatum::height(int a) const {
  return static_cast<int>(std::accumulate(root_coeffs_[a].begin(), root_coeffs_[a].end(), std::int64_t{0}));
}

int RootDatum::root_index(const IntVec& v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootDatum::coroot_index(const IntVec& v) const {
  auto it = coroot_lookup_.find(v);
  return it == coroot_lookup_.end() ? -1 : it->second;
}

int RootDatum::root_from_coeffs(const IntVec& c) const {
  auto it = coeff_lookup_.find(c);
  return it == coeff_lookup_.end() ? -1 : it->second;
}

std::int64_t RootDatum::pairing(const IntVec& character, const IntVec& cochar) const {
  return dot(character, cochar);
}

IntMat RootDatum::reflection_matrix(int a) const {
  IntMat m = IntMat::identity(rank_);
  for (int k = 0; k < rank_; ++k)
    for (int l = 0; l < rank_; ++l) m(k, l) -= coroots_[a][k] * roots_[a][l];
  return m;
}

std::vector<int> RootDatum::reflection_perm(int a) const {
  std::vector<int> p(roots_.size());
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    IntVec v = coroots_[b];
    const auto c = dot(roots_[a], v);
    for (int k = 0; k < rank_; ++k) v[k] -= c * coroots_[a][k];
    p[b] = coroot_index(v);
    MONOENDO_CHECK(p[b] >= 0, "reflection does not permute coroots");
  }
  return p;
}

std::optional<std::vector<int>> RootDatum::perm_of_matrix(const IntMat& m) const {
  if (m.rows() != rank_ || m.cols() != rank_) return std::nullopt;
  std::vector<int> p(roots_.size());
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    const int c = coroot_index(m * coroots_[b]);
    if (c < 0) return std::nullopt;
    p[b] = c;
  }
  // The dual action must carry root b to root p[b]: <p[b], m x> = <b, x>.
  for (std::size_t b = 0; b < roots_.size(); ++b)
    for (int k = 0; k < rank_; ++k) {
      std::int64_t lhs = 0;
      for (int t = 0; t < rank_; ++t) lhs += roots_[p[b]][t] * m(t, k);
      if (lhs != roots_[b][k]) return std::nullopt;
    }
  return p;
}

// ---------------------------------------------------------------- WeylElt

WeylElt::WeylElt(DatumPtr d, IntMat m, std::vector<int> p)
    : datum_(std::move(d)), mat_(std::move(m)), perm_(std::move(p)) {
  for (int a = 0; a < datum_->num_positive(); ++a)
    if (!datum_->is_positive(perm_[a])) ++length_;
}

WeylElt WeylElt::identity(const DatumPtr& d) {
  std::vector<int> p(d->num_roots());
  std::iota(p.begin(), p.end(), 0);
  return WeylElt(d, IntMat::identity(d->rank()), std::move(p));
}

WeylElt WeylElt::simple(const DatumPtr& d, int i) {
  if (i < 0 || i >= d->semisimple_rank()) throw InputError("simple reflection index out of range");
  return WeylElt(d, d->simple_reflection_matrix(i), d->simple_reflection_perm(i));
}

WeylElt WeylElt::reflection(const DatumPtr& d, int root) {
  return WeylElt(d, d->reflection_matrix(root), d->reflection_perm(root));
}

WeylElt WeylElt::from_word(const DatumPtr& d, std::span<const int> word) {
  WeylElt w = identity(d);
  for (int i : word) w = w.times_simple(i);
  return w;
}

WeylElt WeylElt::from_matrix(const DatumPtr& d, const IntMat& m) {
  auto p = d->perm_of_matrix(m);
  if (!p) throw InputError("matrix does not preserve the root datum");
  WeylElt w(d, m, std::move(*p));
  const WeylElt check = from_word(d, w.reduced_word());
  if (!(check == w)) throw InputError("matrix is not in the Weyl group");
  return w;
}

bool WeylElt::has_left_descent(int i) const {
  for (std::size_t b = 0; b < perm_.size(); ++b)
    if (perm_[b] == i) return !datum_->is_positive(static_cast<int>(b));
  throw InternalError("root permutation is not surjective");
}

std::vector<int> WeylElt::reduced_word() const {
  std::vector<int> rev;
  std::vector<int> cur = perm_;
  const int n = datum_->semisimple_rank();
  while (true) {
    int i = 0;
    while (i < n && datum_->is_positive(cur[i])) ++i;
    if (i == n) break;
    rev.push_back(i);
    const auto& s = datum_->simple_reflection_perm(i);
    std::vector<int> next(cur.size());
    for (std::size_t b = 0; b < cur.size(); ++b) next[b] = cur[s[b]];
    cur = std::move(next);
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElt WeylElt::inverse() const {
  auto w = reduced_word();
  std::reverse(w.begin(), w.end());
  return from_word(datum_, w);
}

void require_same_datum(const WeylElt& a, const WeylElt& b) {
  if (a.datum_ptr() != b.datum_ptr()) throw InputError("Weyl elements belong to different root data");
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  require_same_datum(*this, o);
  std::vector<int> p(perm_.size());
  for (std::size_t b = 0; b < p.size(); ++b) p[b] = perm_[o.perm_[b]];
  return WeylElt(datum_, mat_ * o.mat_, std::move(p));
}

WeylElt WeylElt::times_simple(int i) const { return *this * simple(datum_, i); }
WeylElt WeylElt::simple_times(int i) const { return simple(datum_, i) * *this; }

RatVec WeylElt::act_cochar(const RatVec& x) const {
  RatVec r(x.size(), Rat(0));
  for (int i = 0; i < mat_.rows(); ++i)
    for (int j = 0; j < mat_.cols(); ++j) r[i] += x[j] * mat_(i, j);
  return r;
}

bool WeylElt::operator<(const WeylElt& o) const {
  if (length_ != o.length_) return length_ < o.length_;
  return perm_ < o.perm_;
}

namespace {

// Bruhat order by the lifting property, over any Coxeter view given by
// descent and right-multiplication callbacks.
template <class Descent, class Mul>
bool bruhat_descend(WeylElt x, WeylElt w, int rank, Descent descent, Mul mul,
                    const std::function<int(const WeylElt&)>& len) {
  while (true) {
    if (len(x) > len(w)) return false;
    if (w.is_identity()) return x.is_identity();
    int k = 0;
    while (k < rank && !descent(w, k)) ++k;
    MONOENDO_CHECK(k < rank, "nonidentity element without descent");
    if (descent(x, k)) x = mul(x, k);
    w = mul(w, k);
  }
}

}  // namespace

bool bruhat_leq(const WeylElt& x, const WeylElt& w) {
  require_same_datum(x, w);
  return bruhat_descend(
      x, w, w.datum().semisimple_rank(),
      [](const WeylElt& u, int k) { return u.has_right_descent(k); },
      [](const WeylElt& u, int k) { return u.times_simple(k); },
      [](const WeylElt& u) { return u.length(); });
}

WeylElt longest_element(const DatumPtr& d) {
  WeylElt w = WeylElt::identity(d);
  const int n = d->semisimple_rank();
  for (int k = 0; k < n;) {
    if (!w.has_right_descent(k)) {
      w = w.times_simple(k);
      k = 0;
    } else {
      ++k;
    }
  }
  return w;
}

std::size_t default_weyl_cap() {
  if (const char* env = std::getenv("MONOENDO_WEYL_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

// ---------------------------------------------------------------- WeylGroup

WeylGroup::WeylGroup(DatumPtr d, std::size_t cap) : datum_(std::move(d)) {
  const auto order = datum_->weyl_group_order();
  if (order > cap)
    throw SizeError("Weyl group of order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(cap));
  const int n = rank();
  std::vector<int> id(datum_->num_roots());
  std::iota(id.begin(), id.end(), 0);
  perms_.push_back(id);
  words_.emplace_back();
  lengths_.push_back(0);
  index_.emplace(id, 0);
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    for (int s = 0; s < n; ++s) {
      const auto& sp = datum_->simple_reflection_perm(s);
      std::vector<int> p(id.size());
      for (std::size_t b = 0; b < p.size(); ++b) p[b] = perms_[k][sp[b]];
      if (index_.count(p)) continue;
      index_.emplace(p, perms_.size());
      auto w = words_[k];
      w.push_back(s);
      perms_.push_back(std::move(p));
      words_.push_back(std::move(w));
      lengths_.push_back(lengths_[k] + 1);
    }
  }
  MONOENDO_CHECK(perms_.size() == order, "Weyl group order mismatch");
  left_.resize(perms_.size() * n);
  right_.resize(perms_.size() * n);
  for (std::size_t k = 0; k < perms_.size(); ++k)
    for (int s = 0; s < n; ++s) {
      const auto& sp = datum_->simple_reflection_perm(s);
      std::vector<int> l(id.size()), r(id.size());
      for (std::size_t b = 0; b < id.size(); ++b) {
        l[b] = sp[perms_[k][b]];
        r[b] = perms_[k][sp[b]];
      }
      left_[k * n + s] = index_.at(l);
      right_[k * n + s] = index_.at(r);
    }
}

WeylElt WeylGroup::element(std::size_t id) const { return WeylElt::from_word(datum_, words_[id]); }

std::size_t WeylGroup::id_of(const WeylElt& w) const {
  if (w.datum_ptr() != datum_) throw InputError("element belongs to a different root datum");
  return id_of_perm(w.perm());
}

std::size_t WeylGroup::id_of_perm(const std::vector<int>& perm) const {
  auto it = index_.find(perm);
  MONOENDO_CHECK(it != index_.end(), "permutation not in W");
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  std::size_t x = b;
  const auto& w = words_[a];
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = left(*it, x);
  return x;
}

std::size_t WeylGroup::inverse(std::size_t id) const {
  std::size_t x = 0;
  for (int s : words_[id]) x = left(s, x);
  return x;
}

std::vector<WeylElt> WeylGroup::elements() const {
  std::vector<WeylElt> r;
  r.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) r.push_back(element(k));
  return r;
}

std::vector<WeylElt> enumerate_weyl(const DatumPtr& d, std::size_t cap) {
  return WeylGroup(d, cap).elements();
}

// ---------------------------------------------------------------- ReflectionSubgroup

ReflectionSubgroup::ReflectionSubgroup(DatumPtr d, RootSet positive)
    : datum_(std::move(d)), positive_(std::move(positive)) {
  const int p = datum_->num_positive();
  MONOENDO_CHECK(static_cast<int>(positive_.size()) == p, "root subset has wrong size");
  for (int a = 0; a < p; ++a) {
    if (!positive_[a]) continue;
    const auto refl = datum_->reflection_perm(a);
    for (int b = 0; b < p; ++b) {
      if (!positive_[b]) continue;
      const int img = refl[b];
      const int pimg = datum_->is_positive(img) ? img : datum_->negate(img);
      MONOENDO_CHECK(positive_[pimg], "root subset is not closed under its reflections");
    }
  }
  for (int a = 0; a < p; ++a) {
    if (!positive_[a]) continue;
    bool decomposable = false;
    for (int b = 0; b < p && !decomposable; ++b) {
      if (!positive_[b] || b == a) continue;
      IntVec c = datum_->root_coeffs(a);
      const auto& cb = datum_->root_coeffs(b);
      for (std::size_t t = 0; t < c.size(); ++t) c[t] -= cb[t];
      const int r = datum_->root_from_coeffs(c);
      if (r >= 0 && datum_->is_positive(r) && positive_[r]) decomposable = true;
    }
    if (!decomposable) simple_.push_back(a);
  }
  for (int a : simple_) gens_.push_back(WeylElt::reflection(datum_, a));
  const int n = rank();
  cartan_ = IntMat(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      cartan_(k, l) = dot(datum_->root(simple_[k]), datum_->coroot(simple_[l]));
  components_ = identify_cartan(cartan_);
}

ReflectionSubgroup ReflectionSubgroup::whole(const DatumPtr& d) {
  RootSet all(d->num_positive());
  all.set();
  return ReflectionSubgroup(d, all);
}

bool ReflectionSubgroup::contains_root(int a) const {
  const int pa = datum_->is_positive(a) ? a : datum_->negate(a);
  return positive_[pa];
}

int ReflectionSubgroup::simple_position(int root) const {
  auto it = std::find(simple_.begin(), simple_.end(), root);
  return it == simple_.end() ? -1 : static_cast<int>(it - simple_.begin());
}

bool ReflectionSubgroup::contains(const WeylElt& w) const {
  if (w.datum_ptr() != datum_) throw InputError("element belongs to a different root datum");
  return min_coset_rep(w).is_identity();
}

int ReflectionSubgroup::length(const WeylElt& w) const {
  int l = 0;
  for (auto a = positive_.find_first(); a != RootSet::npos; a = positive_.find_next(a))
    if (!datum_->is_positive(w.root_image(static_cast<int>(a)))) ++l;
  return l;
}

bool ReflectionSubgroup::has_right_descent(const WeylElt& w, int k) const {
  return !datum_->is_positive(w.root_image(simple_[k]));
}

bool ReflectionSubgroup::has_left_descent(const WeylElt& w, int k) const {
  const auto& p = w.perm();
  for (std::size_t b = 0; b < p.size(); ++b)
    if (p[b] == simple_[k]) return !datum_->is_positive(static_cast<int>(b));
  throw InternalError("root permutation is not surjective");
}

std::vector<int> ReflectionSubgroup::reduced_word(const WeylElt& w) const {
  if (!contains(w)) throw InputError("element is not in the reflection subgroup");
  std::vector<int> rev;
  WeylElt cur = w;
  while (!cur.is_identity()) {
    int k = 0;
    while (k < rank() && !has_right_descent(cur, k)) ++k;
    MONOENDO_CHECK(k < rank(), "subgroup element without descent");
    rev.push_back(k);
    cur = cur * gens_[k];
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElt ReflectionSubgroup::from_word(std::span<const int> word) const {
  WeylElt w = identity();
  for (int k : word) {
    if (k < 0 || k >= rank()) throw InputError("subgroup generator index out of range");
    w = w * gens_[k];
  }
  return w;
}

WeylElt ReflectionSubgroup::longest() const {
  WeylElt w = identity();
  for (int k = 0; k < rank();) {
    if (!has_right_descent(w, k)) {
      w = w * gens_[k];
      k = 0;
    } else {
      ++k;
    }
  }
  return w;
}

WeylElt ReflectionSubgroup::min_coset_rep(const WeylElt& w) const {
  WeylElt cur = w;
  for (int k = 0; k < rank();) {
    if (has_right_descent(cur, k)) {
      cur = cur * gens_[k];
      k = 0;
    } else {
      ++k;
    }
  }
  return cur;
}

bool ReflectionSubgroup::bruhat_leq(const WeylElt& x, const WeylElt& w) const {
  if (!contains(x) || !contains(w)) throw InputError("element is not in the reflection subgroup");
  return bruhat_descend(
      x, w, rank(), [this](const WeylElt& u, int k) { return has_right_descent(u, k); },
      [this](const WeylElt& u, int k) { return u * gens_[k]; },
      [this](const WeylElt& u) { return length(u); });
}

std::vector<WeylElt> ReflectionSubgroup::elements(std::size_t cap) const {
  if (order() > cap)
    throw SizeError("reflection subgroup of order " + std::to_string(order()) + " exceeds cap " +
                    std::to_string(cap));
  std::vector<WeylElt> out{identity()};
  std::unordered_map<std::vector<int>, std::size_t, IntSeqHash> seen{{out[0].perm(), 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int k = 0; k < rank(); ++k) {
      WeylElt y = out[i] * gens_[k];
      if (seen.count(y.perm())) continue;
      seen.emplace(y.perm(), out.size());
      out.push_back(std::move(y));
    }
  MONOENDO_CHECK(out.size() == order(), "reflection subgroup order mismatch");
  return out;
}

}  // namespace monoendo
