#include <numeric>
#include <random>

#include <doctest.h>

#include "monoendo/error.hpp"
#include "monoendo/frobenius.hpp"
#include "test_util.hpp"

using namespace monoendo;
using testutil::all_params;
using testutil::param;

namespace {

DatumPtr sl(int n) { return RootDatum::from_cartan("A" + std::to_string(n - 1), Isogeny::simply_connected); }

// chi(alpha_i^vee) = (n-1)/n: restriction of K^1 x K^2 x ... x K^n to the diagonal torus of SL_n
CharParam sln_param(int n) {
  const DatumPtr d = sl(n);
  RatVec v(n - 1, Rat(n - 1, n));
  return CharParam(d, v);
}

const std::vector<std::int64_t> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13};

}  // namespace

TEST_CASE("twist construction") {
  const DatumPtr a3 = RootDatum::from_cartan("A3", Isogeny::simply_connected);
  CHECK(Twist::diagram(a3, {0, 1, 2}) == IntMat::identity(3));
  CHECK(Twist::diagram(a3, {2, 1, 0}) == Twist::opposition(a3));
  const Twist u = Twist::frobenius(a3, 3, Twist::opposition(a3));
  CHECK(u.simple_perm() == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(Twist::diagram(a3, {1, 0, 2}), InputError);
  CHECK_THROWS_AS(Twist::frobenius(a3, 6, IntMat::identity(3)), InputError);

  // triality exists for Spin_8 and PSO_8 but not for SO_8
  const DatumPtr d4 = RootDatum::from_cartan("D4", Isogeny::simply_connected);
  const DatumPtr d4ad = RootDatum::from_cartan("D4", Isogeny::adjoint);
  const std::vector<int> tri = {3, 1, 0, 2};
  CHECK(Twist::automorphism(d4, Twist::diagram(d4, tri)).simple_perm() == tri);
  CHECK(Twist::automorphism(d4ad, Twist::diagram(d4ad, tri)).simple_perm() == tri);
  RatMat so8(4, 4);  // coroot lattice plus the first fundamental coweight
  so8(0, 0) = Rat(1); so8(1, 1) = Rat(1); so8(2, 2) = Rat(1);
  so8(3, 0) = Rat(1); so8(3, 1) = Rat(1); so8(3, 2) = Rat(1, 2); so8(3, 3) = Rat(1, 2);
  const DatumPtr so = RootDatum::from_lattice("D4", so8);
  CHECK_THROWS_AS(Twist::diagram(so, tri), InputError);
  CHECK_NOTHROW(Twist::diagram(so, {0, 1, 3, 2}));

  // opposition on the opposite-invariant types is the identity
  for (const char* t : {"B3", "C3", "G2", "D4"}) {
    const DatumPtr d = RootDatum::from_cartan(t, Isogeny::simply_connected);
    CHECK(Twist::opposition(d) == IntMat::identity(d->rank()));
  }
}

TEST_CASE("eps_act examples") {
  for (int n = 2; n <= 6; ++n) {
    const CharParam chi = sln_param(n);
    for (std::int64_t q : kPrimePowers) {
      if (std::gcd<std::int64_t>(q, n) != 1) continue;
      const std::int64_t qinv = *mod_inverse(q, n);
      const Twist split = Twist::split(chi.datum_ptr(), q);
      const Twist unitary = Twist::frobenius(chi.datum_ptr(), q, Twist::opposition(chi.datum_ptr()));
      const CharParam a = eps_act(split, chi), b = eps_act(unitary, chi);
      for (int i = 0; i < n - 1; ++i) {
        // K^{i/q} x K^{(i+1)/q} on e_i - e_{i+1}: -1/(nq)
        CHECK(a.numerators()[i] == mod_floor(-qinv, n));
        // K^{-(n+1-i)/q} x K^{-(n-i)/q}: -1/(nq) as well
        CHECK(b.numerators()[i] == mod_floor(-qinv, n));
      }
    }
  }
  const DatumPtr c2 = RootDatum::from_cartan("C2", Isogeny::simply_connected);
  const CharParam triv = param(c2, {"0", "0"});
  CHECK(eps_act(Twist::split(c2, 5), triv) == triv);
  CHECK_THROWS_AS(eps_act(Twist::split(c2, 4), param(c2, {"1/2", "0"})), InputError);
  CHECK(eps_act(Twist::automorphism(c2, IntMat::identity(2)), param(c2, {"1/2", "0"})) == param(c2, {"1/2", "0"}));
}

TEST_CASE("eps_act is delta-equivariant") {
  struct Case { std::string type; Isogeny iso; std::vector<int> perm; int n; };
  const std::vector<Case> cases = {
      {"A2", Isogeny::simply_connected, {1, 0}, 3},  {"A2", Isogeny::adjoint, {1, 0}, 3},
      {"A3", Isogeny::simply_connected, {2, 1, 0}, 4}, {"A3", Isogeny::adjoint, {2, 1, 0}, 4},
      {"B3", Isogeny::simply_connected, {0, 1, 2}, 4}, {"C3", Isogeny::adjoint, {0, 1, 2}, 3},
      {"G2", Isogeny::simply_connected, {0, 1}, 5},    {"A1xA1", Isogeny::simply_connected, {1, 0}, 3},
  };
  for (const auto& c : cases) {
    const DatumPtr d = RootDatum::from_cartan(c.type, c.iso);
    const IntMat delta = Twist::diagram(d, c.perm);
    const auto ws = enumerate_weyl(d);
    for (std::int64_t q : {1, 2, 7}) {
      if (q > 1 && std::gcd<std::int64_t>(q, c.n) != 1) continue;
      const Twist eps = q == 1 ? Twist::automorphism(d, delta) : Twist::frobenius(d, q, delta);
      for (const auto& chi : all_params(d, c.n)) {
        const CharParam e = eps_act(eps, chi);
        for (const auto& w : ws) REQUIRE(eps_act(eps, w_act(w, chi)) == w_act(eps.act(w), e));
      }
    }
  }
}

TEST_CASE("torus-case counts for SL_n and SU_n") {
  for (int n = 2; n <= 12; ++n) {
    const CharParam chi = sln_param(n);
    const DatumPtr d = chi.datum_ptr();
    REQUIRE(w_circ(chi).is_trivial());
    for (std::int64_t q : kPrimePowers) {
      if (std::gcd<std::int64_t>(q, n) != 1) continue;
      CAPTURE(n);
      CAPTURE(q);
      const std::uint64_t ds = std::gcd<std::int64_t>(n, q - 1), du = std::gcd<std::int64_t>(n, q + 1);
      const TorusCount s = count_torus_case(chi, Twist::split(d, q));
      CHECK(s.count == ds * ds);
      CHECK(s.report.orbits.size() == ds);
      for (const auto& o : s.report.orbits) CHECK(o.stabilizer.size() == ds);
      const TorusCount u = count_torus_case(chi, Twist::frobenius(d, q, Twist::opposition(d)));
      CHECK(u.count == du * du);
      CHECK(u.report.orbits.size() == du);
      for (const auto& o : u.report.orbits) CHECK(o.stabilizer.size() == du);
    }
  }
}

TEST_CASE("b_set structure") {
  SUBCASE("trivial parameter, split") {
    const DatumPtr a2 = RootDatum::from_cartan("A2", Isogeny::simply_connected);
    const OrbitReport r = b_set(param(a2, {"0", "0"}), Twist::split(a2, 5));
    CHECK(r.blocks.size() == 1);
    CHECK(r.b_c.size() == 1);
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].stabilizer.size() == 1);
    CHECK(r.sigma[0] == std::vector<int>{0, 1});
    // every cell of W is preserved
    for (std::size_t k = 0; k < r.partition.size(); ++k) CHECK(r.cell_perm[0][k] == k);
  }
  SUBCASE("trivial parameter, unitary") {
    const DatumPtr a3 = RootDatum::from_cartan("A3", Isogeny::simply_connected);
    const OrbitReport r = b_set(param(a3, {"0", "0", "0"}), Twist::frobenius(a3, 2, Twist::opposition(a3)));
    CHECK(r.sigma[0] == std::vector<int>{2, 1, 0});
    CHECK(count_torus_case(param(a3, {"1/4", "1/4", "1/4"}), Twist::split(a3, 5)).count == 16);
    CHECK_THROWS_AS(count_torus_case(param(a3, {"0", "0", "0"}), Twist::split(a3, 5)), RefusalError);
  }
  SUBCASE("eps moving the orbit") {
    const DatumPtr a2 = RootDatum::from_cartan("A2", Isogeny::adjoint);
    // order 3 on the adjoint torus, not Frobenius-stable for q = 2 only after a twist
    const CharParam chi = param(a2, {"1/3", "0"});
    const Twist eps = Twist::split(a2, 2);
    const bool same = orbit(chi).contains(eps_act(eps, chi));
    if (same) CHECK_NOTHROW(b_set(chi, eps));
    else CHECK_THROWS_AS(b_set(chi, eps), RefusalError);
  }
  SUBCASE("orbit counting and sigma over small ranks") {
    struct Case { std::string type; Isogeny iso; int n; std::vector<int> perm; };
    const std::vector<Case> cases = {
        {"C2", Isogeny::simply_connected, 4, {0, 1}}, {"B2", Isogeny::simply_connected, 4, {0, 1}},
        {"A3", Isogeny::simply_connected, 4, {2, 1, 0}}, {"A2", Isogeny::simply_connected, 3, {1, 0}},
        {"G2", Isogeny::simply_connected, 6, {0, 1}},
    };
    int tested = 0;
    for (const auto& c : cases) {
      const DatumPtr d = RootDatum::from_cartan(c.type, c.iso);
      const IntMat delta = Twist::diagram(d, c.perm);
      for (const auto& chi : testutil::orbit_reps(d, c.n)) {
        for (std::int64_t q : {5, 7, 13}) {
          if (std::gcd<std::int64_t>(q, chi.order()) != 1) continue;
          const Twist eps = Twist::frobenius(d, q, delta);
          if (!orbit(chi).contains(eps_act(eps, chi))) {
            CHECK_THROWS_AS(b_set(chi, eps), RefusalError);
            continue;
          }
          const OrbitReport probe = b_set(chi, eps, 0);
          for (std::size_t cell = 0; cell < probe.partition.size(); ++cell) {
            OrbitReport r;
            try {
              r = b_set(chi, eps, cell);
            } catch (const RefusalError&) {
              for (const auto& perm : probe.cell_perm) CHECK(perm[cell] != cell);
              continue;
            }
            std::size_t total = 0;
            for (const auto& o : r.orbits) total += o.members.size();
            CHECK(total == r.b_c.size());
            CHECK(r.b_c.size() == r.omega_c.size());
            const int rank = w_circ(chi).rank();
            for (const auto& s : r.sigma) {
              std::vector<int> sorted = s;
              std::sort(sorted.begin(), sorted.end());
              std::vector<int> id(rank);
              std::iota(id.begin(), id.end(), 0);
              CHECK(sorted == id);
            }
            ++tested;
          }
        }
      }
    }
    CHECK(tested > 50);
  }
}

TEST_CASE("inner trivial automorphism degenerates to the untwisted shape") {
  struct Case { std::string type; int n; };
  for (const auto& c : std::vector<Case>{{"C2", 4}, {"A3", 4}, {"B3", 2}, {"G2", 6}}) {
    const DatumPtr d = RootDatum::from_cartan(c.type, Isogeny::simply_connected);
    const Twist eps = Twist::automorphism(d, IntMat::identity(d->rank()));
    for (const auto& chi : testutil::orbit_reps(d, c.n)) {
      const OrbitReport probe = b_set(chi, eps, 0);
      CHECK(probe.eps_chi == chi);
      CHECK(static_cast<int>(probe.blocks.size()) == probe.omega.order());
      for (std::size_t k = 0; k < probe.blocks.size(); ++k) CHECK(probe.blocks[k].w_min() == probe.omega.reps[k]);
      for (std::size_t cell = 0; cell < probe.partition.size(); ++cell) {
        OrbitReport r;
        try {
          r = b_set(chi, eps, cell);
        } catch (const RefusalError&) {
          continue;
        }
        CHECK(r.orbits.size() == r.b_c.size());
        for (const auto& o : r.orbits) CHECK(o.stabilizer == r.omega_c);
      }
    }
  }
}
