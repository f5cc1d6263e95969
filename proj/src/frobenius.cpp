#include "monoendo/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "monoendo/error.hpp"

namespace monoendo {

void Twist::init(const DatumPtr& d, const IntMat& delta) {
  if (delta.rows() != d->rank() || delta.cols() != d->rank()) throw InputError("delta has the wrong size");
  const auto inv = inverse(to_rat(delta));
  if (!inv) throw InputError("delta is not invertible");
  auto p = d->perm_of_matrix(delta);
  if (!p) throw InputError("delta is not an automorphism of the root datum");
  for (int i = 0; i < d->semisimple_rank(); ++i)
    if ((*p)[i] >= d->semisimple_rank()) throw InputError("delta does not preserve the simple roots");
  datum_ = d;
  delta_ = delta;
  delta_inv_ = to_int(*inv);
  root_perm_ = std::move(*p);
}

Twist Twist::frobenius(const DatumPtr& d, std::int64_t q, const IntMat& delta) {
  if (q < 2 || !is_prime_power(q)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  Twist t;
  t.init(d, delta);
  t.kind_ = TwistKind::frobenius;
  t.q_ = q;
  return t;
}

Twist Twist::automorphism(const DatumPtr& d, const IntMat& delta) {
  Twist t;
  t.init(d, delta);
  return t;
}

IntMat Twist::diagram(const DatumPtr& d, const std::vector<int>& perm) {
  const int r = d->rank(), n = d->semisimple_rank();
  if (r != n) throw InputError("diagram automorphisms by permutation need semisimple data");
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation has the wrong length");
  std::vector<int> sorted_perm = perm;
  std::sort(sorted_perm.begin(), sorted_perm.end());
  for (int i = 0; i < n; ++i)
    if (sorted_perm[i] != i) throw InputError("not a permutation of the simple indices");
  RatMat c(r, n), cp(r, n);  // columns: simple coroots, permuted simple coroots
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < r; ++t) {
      c(t, i) = Rat(d->coroot(i)[t]);
      cp(t, i) = Rat(d->coroot(perm[i])[t]);
    }
  const RatMat m = cp * *inverse(c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (m(i, j).denominator() != 1) throw InputError("permutation does not preserve the cocharacter lattice");
  const IntMat delta = to_int(m);
  Twist check;
  check.init(d, delta);
  return delta;
}

IntMat Twist::opposition(const DatumPtr& d) {
  if (d->rank() != d->semisimple_rank()) throw InputError("opposition needs semisimple data");
  IntMat m = longest_element(d).matrix();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return m;
}

std::vector<int> Twist::simple_perm() const {
  return std::vector<int>(root_perm_.begin(), root_perm_.begin() + datum_->semisimple_rank());
}

WeylElt Twist::act(const WeylElt& w) const {
  if (w.datum_ptr() != datum_) throw InputError("Weyl element and twist have different data");
  return WeylElt::from_matrix(datum_, delta_ * w.matrix() * delta_inv_);
}

std::string Twist::description() const {
  std::ostringstream os;
  if (kind_ == TwistKind::frobenius) os << "frobenius q=" << q_ << ", ";
  else os << "automorphism, ";
  os << "delta on simple roots: [";
  const auto p = simple_perm();
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i] + 1;
  os << "]";
  return os.str();
}

CharParam eps_act(const Twist& eps, const CharParam& chi) {
  if (chi.datum_ptr() != eps.datum()) throw InputError("twist and parameter have different data");
  const std::int64_t n = chi.order();
  std::int64_t scale = 1;
  if (eps.kind() == TwistKind::frobenius) {
    const auto inv = mod_inverse(eps.q(), n);
    if (!inv) throw InputError("gcd(q, N) != 1 for q = " + std::to_string(eps.q()) + ", N = " + std::to_string(n));
    scale = *inv;
  }
  // value on e_k is chi(delta^-1 e_k)
  const IntMat dinv = to_int(*inverse(to_rat(eps.delta())));
  const int r = chi.datum().rank();
  RatVec v(r);
  for (int k = 0; k < r; ++k) {
    std::int64_t s = 0;
    for (int j = 0; j < r; ++j) s = mod_floor(s + chi.numerators()[j] * mod_floor(dinv(j, k), n), n);
    v[k] = Rat(mod_floor(s * scale, n), n);
  }
  return CharParam(chi.datum_ptr(), v);
}

OrbitReport b_set(const CharParam& chi, const Twist& eps, std::size_t cell) {
  OrbitReport rep;
  rep.chi = chi;
  rep.eps_chi = eps_act(eps, chi);
  const Stabilizer st = stabilizer_and_omega(chi);
  rep.omega = st.omega;
  const ReflectionSubgroup& circ = st.w_circ;
  rep.partition = two_sided_cells(circ);
  if (cell >= rep.partition.size()) throw InputError("cell index out of range");
  rep.cell = cell;
  const ExtendedCell ext = extend_cell(chi, cell, rep.partition);
  rep.omega_c = ext.omega_c;

  rep.blocks = blocks(chi, rep.eps_chi);
  if (rep.blocks.empty()) throw RefusalError("the twist does not preserve the W-orbit of the parameter");
  const int m = rep.omega.order();
  MONOENDO_CHECK(static_cast<int>(rep.blocks.size()) == m, "wrong number of blocks L <- eps L");

  // w^beta eps on W°_L and on its cells
  auto twist_conj = [&](const Block& b, const WeylElt& x) { return b.w_min() * eps.act(x) * b.w_min().inverse(); };
  for (const Block& b : rep.blocks) {
    std::vector<std::size_t> img(rep.partition.size());
    for (std::size_t k = 0; k < rep.partition.size(); ++k) {
      std::set<std::size_t> targets;
      for (const WeylElt& x : rep.partition.cells[k]) {
        const WeylElt y = twist_conj(b, x);
        MONOENDO_CHECK(circ.contains(y), "w^beta eps does not preserve W°_L");
        targets.insert(rep.partition.cell_of(y));
      }
      MONOENDO_CHECK(targets.size() == 1, "w^beta eps does not map cells to cells");
      img[k] = *targets.begin();
    }
    rep.cell_perm.push_back(std::move(img));
  }
  for (std::size_t k = 0; k < rep.blocks.size(); ++k)
    if (rep.cell_perm[k][cell] == cell) rep.b_c.push_back(k);
  if (rep.b_c.empty()) throw RefusalError("no block L <- eps L preserves the cell");

  // products of blocks L <- eps L with Omega_L and eps(Omega_L), via minimal coset representatives
  const ReflectionSubgroup eps_circ = w_circ(rep.eps_chi);
  std::unordered_map<std::vector<int>, std::size_t, IntSeqHash> where;
  for (std::size_t k = 0; k < rep.blocks.size(); ++k) where.emplace(rep.blocks[k].w_min().perm(), k);
  auto index_of = [&](const WeylElt& w) {
    auto it = where.find(eps_circ.min_coset_rep(w).perm());
    MONOENDO_CHECK(it != where.end(), "product is not a block L <- eps L");
    return it->second;
  };
  std::vector<WeylElt> eps_om;
  for (const WeylElt& r : rep.omega.reps) {
    eps_om.push_back(eps.act(r));
    MONOENDO_CHECK(w_act(eps_om.back(), rep.eps_chi) == rep.eps_chi, "eps(Omega_L) does not stabilize eps L");
  }
  // ad[g][k] = gamma_g beta_k eps(gamma_g)^-1, left[g][k] = gamma_g beta_k, right[g][k] = beta_k eps(gamma_g)
  std::vector<std::vector<std::size_t>> ad(m), left(m), right(m);
  for (int g = 0; g < m; ++g) {
    const WeylElt& r = rep.omega.reps[g];
    const WeylElt einv = eps_om[g].inverse();
    for (std::size_t k = 0; k < rep.blocks.size(); ++k) {
      const WeylElt& b = rep.blocks[k].w_min();
      left[g].push_back(index_of(r * b));
      right[g].push_back(index_of(b * eps_om[g]));
      ad[g].push_back(index_of(r * b * einv));
    }
  }

  // B_c is a left and right Omega_c-torsor
  const std::set<std::size_t> bc(rep.b_c.begin(), rep.b_c.end());
  MONOENDO_CHECK(rep.b_c.size() == rep.omega_c.size(), "|B_c| != |Omega_c|");
  for (auto* tr : {&left, &right}) {
    std::set<std::size_t> img;
    for (int g : rep.omega_c) {
      const std::size_t k = (*tr)[g][rep.b_c[0]];
      MONOENDO_CHECK(bc.count(k), "Omega_c translation leaves B_c");
      img.insert(k);
    }
    MONOENDO_CHECK(img.size() == bc.size(), "B_c is not an Omega_c-torsor");
  }

  // Ad_eps orbits of Omega_c on B_c
  std::set<std::size_t> seen;
  std::vector<int> first_stab;
  for (std::size_t k : rep.b_c) {
    if (seen.count(k)) continue;
    AdOrbit o;
    std::set<std::size_t> members;
    for (int g : rep.omega_c) {
      MONOENDO_CHECK(bc.count(ad[g][k]), "Ad_eps leaves B_c");
      members.insert(ad[g][k]);
      if (ad[g][k] == k) o.stabilizer.push_back(g);
    }
    for (int g = 0; g < m; ++g)
      if (ad[g][k] == k) o.stabilizer_full.push_back(g);
    o.members.assign(members.begin(), members.end());
    MONOENDO_CHECK(o.members.size() * o.stabilizer.size() == rep.omega_c.size(), "orbit-stabilizer fails for Ad_eps");
    if (rep.orbits.empty()) first_stab = o.stabilizer;
    MONOENDO_CHECK(o.stabilizer == first_stab, "Ad_eps stabilizers differ between orbits");
    seen.insert(members.begin(), members.end());
    rep.orbits.push_back(std::move(o));
  }
  std::size_t total = 0;
  for (const auto& o : rep.orbits) total += o.members.size();
  MONOENDO_CHECK(total == rep.b_c.size(), "Ad_eps orbits do not cover B_c");

  // sigma_{beta eps} on the simple roots of Phi_L
  const RootDatum& d = chi.datum();
  for (std::size_t k : rep.b_c) {
    std::vector<int> s;
    for (int a : circ.simple_roots()) {
      const int img = rep.blocks[k].w_min().root_image(eps.root_perm()[a]);
      MONOENDO_CHECK(d.is_positive(img), "sigma does not preserve positivity");
      const int pos = circ.simple_position(img);
      MONOENDO_CHECK(pos >= 0, "sigma does not preserve the simple roots of Phi_L");
      s.push_back(pos);
    }
    rep.sigma.push_back(std::move(s));
  }
  return rep;
}

TorusCount count_torus_case(const CharParam& chi, const Twist& eps) {
  if (!w_circ(chi).is_trivial())
    throw RefusalError("W°_L is nontrivial (" + w_circ(chi).type_label() +
                       "): counting needs unipotent data for the endoscopic group; use b_set for the block structure");
  TorusCount tc;
  tc.report = b_set(chi, eps, 0);
  for (const auto& o : tc.report.orbits) tc.count += o.stabilizer_full.size();
  return tc;
}

}  // namespace monoendo
