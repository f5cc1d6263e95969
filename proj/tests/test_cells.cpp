#include <doctest.h>

#include <algorithm>
#include <set>

#include "monoendo/cells.hpp"
#include "monoendo/error.hpp"
#include "oracle/coxeter_oracle.hpp"
#include "test_util.hpp"

using namespace monoendo;
using testutil::param;

namespace {

// Cells as sorted sets of oracle ids, for comparison.
std::set<std::vector<int>> as_oracle_sets(const CellPartition& p, const oracle::Coxeter& cox) {
  std::set<std::vector<int>> out;
  for (const auto& c : p.cells) {
    std::vector<int> ids;
    for (const auto& x : c) ids.push_back(cox.id(x.matrix()));
    std::sort(ids.begin(), ids.end());
    out.insert(ids);
  }
  return out;
}

std::set<std::vector<int>> oracle_sets(const oracle::Coxeter& cox) {
  std::set<std::vector<int>> out;
  for (auto c : cox.two_sided_cells()) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

oracle::Coxeter oracle_of(const ReflectionSubgroup& g) {
  std::vector<IntMat> gens;
  for (int i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i).matrix());
  return oracle::Coxeter(gens, g.datum()->rank());
}

}  // namespace

TEST_CASE("small cell partitions") {
  auto a1 = RootDatum::from_cartan("A1", Isogeny::simply_connected);
  auto p1 = two_sided_cells(ReflectionSubgroup::whole(a1));
  REQUIRE(p1.size() == 2);
  CHECK(p1.cells[0][0].is_identity());
  CHECK(p1.cells[1][0] == WeylElt::simple(a1, 0));
  CHECK(p1.leq(1, 0));
  CHECK_FALSE(p1.leq(0, 1));

  auto a2 = RootDatum::from_cartan("A2", Isogeny::simply_connected);
  auto p2 = two_sided_cells(ReflectionSubgroup::whole(a2));
  REQUIRE(p2.size() == 3);
  CHECK(p2.cells[0].size() == 1);
  CHECK(p2.cells[1].size() == 4);
  CHECK(p2.cells[2].size() == 1);
  CHECK(p2.cells[2][0] == longest_element(a2));
  CHECK(p2.leq(2, 1));
  CHECK(p2.leq(1, 0));
  CHECK(p2.leq(2, 0));

  // trivial W°
  auto sl3 = param(a2, {"2/3", "2/3"});
  REQUIRE(w_circ(sl3).is_trivial());
  auto p0 = two_sided_cells(w_circ(sl3));
  CHECK(p0.size() == 1);
  CHECK(p0.cells[0].size() == 1);
}

TEST_CASE("cells agree with the mu-graph oracle") {
  for (const char* type : {"A1", "A2", "B2", "C2", "A3", "G2", "B3", "A1xA1", "A2xA1"}) {
    auto d = RootDatum::from_cartan(type, Isogeny::simply_connected);
    const auto g = ReflectionSubgroup::whole(d);
    const auto p = two_sided_cells(g);
    const auto cox = oracle_of(g);
    CHECK(as_oracle_sets(p, cox) == oracle_sets(cox));
    // partial order, {e} on top, w0 at the bottom
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (a != b) CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
    const std::size_t bottom = p.cell_of(longest_element(d));
    CHECK(p.cells[bottom].size() == 1);
    for (std::size_t a = 0; a < p.size(); ++a) CHECK(p.leq(bottom, a));
  }
  // proper reflection subgroups
  auto sp4 = RootDatum::from_cartan("C2", Isogeny::simply_connected);
  auto b3 = RootDatum::from_cartan("B3", Isogeny::simply_connected);
  for (const auto& chi : {param(sp4, {"1/2", "1/2"}), param(sp4, {"1/2", "0"}), param(b3, {"1/2", "0", "0"}),
                          param(b3, {"0", "0", "1/2"})}) {
    const auto g = w_circ(chi);
    const auto cox = oracle_of(g);
    CHECK(as_oracle_sets(two_sided_cells(g), cox) == oracle_sets(cox));
  }
}

TEST_CASE("Omega_L acting on cells of Sp4 endoscopic groups") {
  auto sp4 = RootDatum::from_cartan("C2", Isogeny::simply_connected);
  {
    const auto chi = param(sp4, {"1/2", "0"});
    const auto cells = extended_cells(chi);
    REQUIRE(cells.size() == 2);
    for (const auto& e : cells) {
      CHECK(e.partition.size() == 2);
      CHECK(e.omega.order() == 2);
      CHECK(e.omega_c.size() == 2);
      CHECK(e.neutral_cells.size() == 1);
    }
  }
  {
    // W° = <s1, s2 s1 s2>; s2 lies in W_L and swaps the two middle cells
    const auto chi = param(sp4, {"1/2", "1/2"});
    const auto p = two_sided_cells(w_circ(chi));
    REQUIRE(p.size() == 4);
    const std::size_t c1 = p.cell_of(WeylElt::simple(sp4, 0));
    const std::size_t c2 = p.cell_of(WeylElt::from_word(sp4, std::vector<int>{1, 0, 1}));
    CHECK(c1 != c2);
    const auto e = extend_cell(chi, c1, p);
    CHECK(e.omega.order() == 2);
    CHECK(e.omega_c.size() == 1);
    CHECK(e.neutral_cells == std::vector<std::size_t>{std::min(c1, c2), std::max(c1, c2)});
    CHECK(e.neutral_slice().size() == 2);
    CHECK(extended_cells(chi).size() == 3);
  }
  CHECK_THROWS_AS(extend_cell(param(sp4, {"1/2", "0"}), 7), InputError);
}

TEST_CASE("extended cells satisfy both defining conditions") {
  std::vector<CharParam> params;
  for (const auto& [type, n] : std::vector<std::pair<const char*, int>>{{"A2", 3}, {"C2", 4}, {"B2", 2}, {"G2", 3}})
    for (const auto& c : testutil::orbit_reps(RootDatum::from_cartan(type, Isogeny::simply_connected), n))
      params.push_back(c);
  auto a3 = RootDatum::from_cartan("A3", Isogeny::simply_connected);
  params.push_back(param(a3, {"1/2", "0", "1/2"}));
  params.push_back(param(a3, {"0", "1/2", "0"}));
  for (const auto& chi : params) {
    const OrbitData orb = orbit(chi);
    std::size_t covered = 0;
    for (const auto& e : extended_cells(chi)) {
      verify_extended_cell(e, orb);
      covered += e.neutral_slice().size();
      // trivial L: [c] = c and Omega_c = 1
      if (chi.is_trivial()) CHECK(e.omega_c.size() == 1);
      // slices of all blocks out of chi partition the transporter
      for (const auto& b : blocks(chi, chi)) CHECK(e.slice(b).size() == e.neutral_slice().size());
    }
    CHECK(covered == w_circ(chi).order());
  }
}

TEST_CASE("cell cap") {
  auto b3 = RootDatum::from_cartan("B3", Isogeny::simply_connected);
  CHECK_THROWS_AS(two_sided_cells(ReflectionSubgroup::whole(b3), 10), SizeError);
}
