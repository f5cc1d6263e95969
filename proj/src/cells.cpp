#include "monoendo/cells.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "monoendo/error.hpp"
#include "monoendo/hecke.hpp"

namespace monoendo {

std::size_t default_cell_cap() {
  if (const char* env = std::getenv("MONOENDO_CELL_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000;
}

std::size_t CellPartition::cell_of(const WeylElt& x) const {
  auto it = index.find(x.perm());
  if (it == index.end()) throw InputError("element is not in the group");
  return it->second;
}

CellPartition two_sided_cells(const ReflectionSubgroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw SizeError("cell computation needs |W°| = " + std::to_string(g.order()) + " > cap " + std::to_string(cap));
  const DatumPtr sub = subgroup_datum(g);
  HeckeAlgebra h(CharParam::trivial(sub));
  const WeylGroup& wg = h.weyl();
  const std::size_t n = wg.size();
  MONOENDO_CHECK(n == g.order(), "subgroup datum has the wrong Weyl group");

  // edge y -> x when c_x occurs in c_s c_y or c_y c_s
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph graph(n);
  for (std::size_t y = 0; y < n; ++y)
    for (int s = 0; s < wg.rank(); ++s) {
      const std::size_t sid = wg.left(s, 0);
      for (const auto& terms : {h.structure_constants({sid, 0}, {y, 0}), h.structure_constants({y, 0}, {sid, 0})})
        for (const auto& [k, c] : terms)
          if (k.first != y) boost::add_edge(y, k.first, graph);
    }
  std::vector<int> comp(n);
  const int ncomp = boost::strong_components(graph, comp.data());

  // reachability between components
  std::vector<std::set<int>> succ(ncomp);
  for (auto [e, end] = boost::edges(graph); e != end; ++e) {
    const int a = comp[boost::source(*e, graph)], b = comp[boost::target(*e, graph)];
    if (a != b) succ[a].insert(b);
  }
  std::vector<std::vector<char>> below(ncomp, std::vector<char>(ncomp, 0));  // below[a][b]: b <= a
  for (int a = 0; a < ncomp; ++a) {
    std::vector<int> stack{a};
    below[a][a] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : succ[x])
        if (!below[a][y]) {
          below[a][y] = 1;
          stack.push_back(y);
        }
    }
  }

  // ids are sorted by length, so the first id met orders the components
  std::vector<int> first(ncomp, -1);
  for (std::size_t x = 0; x < n; ++x)
    if (first[comp[x]] < 0) first[comp[x]] = static_cast<int>(x);
  std::vector<int> perm(ncomp);
  for (int a = 0; a < ncomp; ++a) perm[a] = a;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> rank_of(ncomp);
  for (int r = 0; r < ncomp; ++r) rank_of[perm[r]] = r;

  CellPartition out;
  out.group = g;
  out.cells.resize(ncomp);
  for (std::size_t x = 0; x < n; ++x) {
    // same matrix on X_*, so the element of g
    const WeylElt w = WeylElt::from_matrix(g.datum(), wg.element(x).matrix());
    out.index.emplace(w.perm(), rank_of[comp[x]]);
    out.cells[rank_of[comp[x]]].push_back(w);
  }
  out.order.assign(ncomp, std::vector<char>(ncomp, 0));
  for (int a = 0; a < ncomp; ++a)
    for (int b = 0; b < ncomp; ++b) out.order[rank_of[b]][rank_of[a]] = below[a][b];
  for (auto& c : out.cells)
    std::sort(c.begin(), c.end(), [&](const WeylElt& a, const WeylElt& b) {
      const int la = g.length(a), lb = g.length(b);
      return la != lb ? la < lb : a < b;
    });
  MONOENDO_CHECK(out.cells[0].size() == 1 && out.cells[0][0].is_identity(), "{e} is not the first cell");
  for (std::size_t a = 0; a < out.size(); ++a) MONOENDO_CHECK(out.leq(a, 0), "{e} is not the maximum");
  return out;
}

namespace {

std::vector<WeylElt> sorted(std::vector<WeylElt> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<WeylElt> ExtendedCell::neutral_slice() const {
  std::vector<WeylElt> out;
  for (std::size_t k : neutral_cells)
    out.insert(out.end(), partition.cells[k].begin(), partition.cells[k].end());
  return sorted(std::move(out));
}

std::vector<WeylElt> ExtendedCell::slice(const Block& beta) const {
  // c(beta) = w^{beta delta} c(neutral) (w^delta)^-1 for a block delta: param -> source
  const auto to_source = find_transporter(param, beta.source());
  if (!to_source) throw InputError("block does not start in the orbit of the cell");
  const WeylElt wd = w_circ(param).min_coset_rep(*to_source);
  const WeylElt wbd = beta.w_min() * wd;
  const WeylElt wd_inv = wd.inverse();
  std::vector<WeylElt> out;
  for (const WeylElt& x : neutral_slice()) {
    WeylElt y = wbd * x * wd_inv;
    MONOENDO_CHECK(beta.contains(y), "cell slice leaves its block");
    out.push_back(std::move(y));
  }
  return sorted(std::move(out));
}

namespace {

ExtendedCell build_extended(const CharParam& chi, std::size_t cell, const CellPartition& partition) {
  if (cell >= partition.size()) throw InputError("cell index out of range");
  ExtendedCell e;
  e.param = chi;
  e.partition = partition;
  e.cell = cell;
  const Stabilizer st = stabilizer_and_omega(chi);
  MONOENDO_CHECK(st.w_circ == partition.group, "partition is not of W°_L");
  e.omega = st.omega;
  for (const WeylElt& r : e.omega.reps) {
    const Block b(chi, r);
    std::vector<std::size_t> img(partition.size());
    for (std::size_t k = 0; k < partition.size(); ++k) {
      std::set<std::size_t> targets;
      for (const WeylElt& x : partition.cells[k]) targets.insert(partition.cell_of(conj_by_min(b, x)));
      MONOENDO_CHECK(targets.size() == 1, "conjugation does not map cells to cells");
      img[k] = *targets.begin();
      MONOENDO_CHECK(partition.cells[img[k]].size() == partition.cells[k].size(), "conjugation changes cell size");
    }
    e.omega_on_cells.push_back(std::move(img));
  }
  // group action
  const int m = e.omega.order();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (std::size_t k = 0; k < partition.size(); ++k)
        MONOENDO_CHECK(e.omega_on_cells[e.omega.table[a][b]][k] == e.omega_on_cells[a][e.omega_on_cells[b][k]],
                       "Omega_L does not act on cells");
  std::set<std::size_t> orbit;
  for (int a = 0; a < m; ++a) {
    orbit.insert(e.omega_on_cells[a][cell]);
    if (e.omega_on_cells[a][cell] == cell) e.omega_c.push_back(a);
  }
  e.neutral_cells.assign(orbit.begin(), orbit.end());
  // Omega_L is abelian, so every cell in the orbit has the same stabilizer
  for (std::size_t k : e.neutral_cells) {
    std::vector<int> st_k;
    for (int a = 0; a < m; ++a)
      if (e.omega_on_cells[a][k] == k) st_k.push_back(a);
    MONOENDO_CHECK(st_k == e.omega_c, "cell stabilizer depends on the orbit representative");
  }
  MONOENDO_CHECK(e.omega_c.size() * e.neutral_cells.size() == static_cast<std::size_t>(m), "orbit-stabilizer fails");
  return e;
}

}  // namespace

ExtendedCell extend_cell(const CharParam& chi, std::size_t cell, const CellPartition& partition) {
  ExtendedCell e = build_extended(chi, cell, partition);
  if (orbit_size(chi) <= 4) verify_extended_cell(e, monoendo::orbit(chi));
  return e;
}

ExtendedCell extend_cell(const CharParam& chi, std::size_t cell) {
  return extend_cell(chi, cell, two_sided_cells(w_circ(chi)));
}

std::vector<ExtendedCell> extended_cells(const CharParam& chi) {
  const CellPartition p = two_sided_cells(w_circ(chi));
  std::vector<ExtendedCell> out;
  std::set<std::size_t> covered;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (covered.count(k)) continue;
    out.push_back(extend_cell(chi, k, p));
    covered.insert(out.back().neutral_cells.begin(), out.back().neutral_cells.end());
  }
  return out;
}

void verify_extended_cell(const ExtendedCell& e, const OrbitData& orbit) {
  const std::size_t n = orbit.size();
  // (2): neutral slices are unions of one Omega-orbit of cells
  for (std::size_t s = 0; s < n; ++s) {
    const CharParam& l = orbit.members[s];
    const auto slice = e.slice(neutral_block(l));
    const CellPartition p = two_sided_cells(w_circ(l));
    std::set<std::size_t> ks;
    for (const auto& x : slice) ks.insert(p.cell_of(x));
    std::size_t total = 0;
    for (std::size_t k : ks) total += p.cells[k].size();
    MONOENDO_CHECK(total == slice.size(), "neutral slice is not a union of cells");
    const ExtendedCell f = build_extended(l, *ks.begin(), p);
    MONOENDO_CHECK(std::vector<std::size_t>(ks.begin(), ks.end()) == f.neutral_cells,
                   "neutral slice is not one Omega_L-orbit of cells");
  }
  // (1): w^gamma c(beta) = c(gamma beta) = c(gamma) w^beta
  auto translate = [](const WeylElt& l, const std::vector<WeylElt>& xs, const WeylElt& r) {
    std::vector<WeylElt> out;
    for (const auto& x : xs) out.push_back(l * x * r);
    return sorted(std::move(out));
  };
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (const Block& beta : blocks(orbit.members[t], orbit.members[s])) {
        const auto cb = e.slice(beta);
        const WeylElt id = WeylElt::identity(beta.source().datum_ptr());
        for (std::size_t u = 0; u < n; ++u)
          for (const Block& gamma : blocks(orbit.members[u], orbit.members[t])) {
            const auto cgb = e.slice(block_mul(gamma, beta));
            MONOENDO_CHECK(translate(gamma.w_min(), cb, id) == cgb, "w^gamma c(beta) != c(gamma beta)");
            MONOENDO_CHECK(translate(id, e.slice(gamma), beta.w_min()) == cgb, "c(gamma) w^beta != c(gamma beta)");
          }
      }
}

}  // namespace monoendo
