#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ghost/slice.hpp"
#include "oracles.hpp"

using namespace ghost;

namespace {
const F2Result& t56() {
  static F2Result r = compute_f2(torus_braid(5, 6), /*lift_full=*/true);
  return r;
}

const F2Point& point_at(const F2Result& r, double a, double b) {
  for (const auto& pt : r.points)
    if (std::abs(pt.reduced[0] - Cpx(a, 0)) < 1e-8 && std::abs(pt.reduced[1] - Cpx(b, 0)) < 1e-8)
      return pt;
  throw std::runtime_error("point not found");
}
}

TEST_CASE("rectangle residuals at the rational points") {
  const auto& p11 = point_at(t56(), 1, 1);
  RectangleResidual r = rectangle_residual(p11, 3, 4);
  CHECK(std::abs(r.value - Cpx(5, 0)) < 1e-12);
  REQUIRE(r.exact);
  CHECK(*r.exact == QuadVal{Rat(5), Rat(0)});  // equals 5 exactly
  CHECK(!r.satisfied());

  const auto& p22 = point_at(t56(), 2, 2);
  for (int a = 3; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) {
      RectangleResidual rr = rectangle_residual(p22, a, b);
      REQUIRE(rr.exact);
      CHECK(rr.exact->is_zero());
      CHECK(rr.satisfied());
    }

  const auto& p0 = point_at(t56(), 0, -1);
  RectangleResidual r0 = rectangle_residual(p0, 3, 4);
  REQUIRE(r0.exact);
  CHECK(*r0.exact == QuadVal{Rat(5), Rat(0)});
}

TEST_CASE("rectangle value matches an independent determinant") {
  const auto& r = t56();
  for (const auto& pt : r.points) {
    for (auto [a, b] : {std::pair{3, 4}, {3, 5}, {4, 5}}) {
      std::array<int, 4> idx{1, 2, a, b};
      std::array<std::array<Cpx, 4>, 4> m;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              i == j ? Cpx(2, 0) : pt.value(PairSym(idx[static_cast<size_t>(i)],
                                                    idx[static_cast<size_t>(j)]));
      Cpx expect = oracle::det4_direct(m);
      RectangleResidual rr = rectangle_residual(pt, a, b);
      CHECK(std::abs(rr.value - expect) < 1e-9);
    }
  }
}

TEST_CASE("rectangle determinant is invariant under simultaneous row/column permutation") {
  const auto& pt = point_at(t56(), 0, -1);
  std::array<int, 4> idx{1, 2, 3, 4};
  std::array<std::array<Cpx, 4>, 4> base;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      base[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          i == j ? Cpx(2, 0)
                 : pt.value(PairSym(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]));
  Cpx reference = oracle::det4_direct(base);
  std::array<int, 4> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    std::array<std::array<Cpx, 4>, 4> m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            base[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                [static_cast<size_t>(perm[static_cast<size_t>(j)])];
    CHECK(std::abs(oracle::det4_direct(m) - reference) < 1e-10);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("hexagon lift at the abelian point") {
  const auto& p22 = point_at(t56(), 2, 2);
  HexagonWitness h = hexagon_lift(p22, {1, 2, 3, 4, 5});
  CHECK(h.consistent);
  // every pair trace is 2, so every half-determinant vanishes and all triple
  // values are 0
  for (const auto& [t, v] : h.triple_values) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("hexagon handles imaginary triple values") {
  // x_ijk^2 < 0 just means the value is imaginary; the lift must not reject it
  const auto& r = t56();
  for (const auto& pt : r.points) {
    HexagonWitness h = hexagon_lift(pt, {1, 2, 3});
    CHECK(h.index_set == std::vector<int>{1, 2, 3});
    CHECK(h.consistent);  // a single triple is always consistent over C
  }
}

TEST_CASE("exactly three ghosts for T(5,6), each with a failed rectangle") {
  const auto& r = t56();
  int ghosts = 0;
  for (const auto& pt : r.points) {
    GhostReport g = classify_ghost(pt, 5, 24);
    bool expected_ghost = false;
    for (auto [a, b] : {std::pair{0.0, -1.0}, {1.0, 1.0}, {-2.0, 1.0}})
      if (std::abs(pt.reduced[0] - Cpx(a, 0)) < 1e-8 && std::abs(pt.reduced[1] - Cpx(b, 0)) < 1e-8)
        expected_ghost = true;
    CHECK(g.is_ghost == expected_ghost);
    if (g.is_ghost) {
      ++ghosts;
      REQUIRE(g.failed_rectangle);  // a concrete failed relation
      CHECK(!g.failed_rectangle->satisfied());
    } else {
      CHECK(!g.failed_rectangle);
      REQUIRE(g.hexagon);
      CHECK(g.hexagon->consistent);
    }
  }
  CHECK(ghosts == 3);
}

TEST_CASE("low bridge index knots have no ghosts, even over the full arc range") {
  for (const char* spec : {"torus:2,3", "braid:3:1 -2 1 -2"}) {
    auto r = compute_f2(parse_knot_spec(spec), /*lift_full=*/true);
    for (const auto& pt : r.points) {
      GhostReport seed_scope = classify_ghost(pt, r.diagram.arc_count == 3 ? 2 : 3,
                                              r.diagram.arc_count, RectangleScope::SeedRange);
      CHECK(!seed_scope.is_ghost);
      GhostReport full_scope = classify_ghost(pt, r.diagram.arc_count == 3 ? 2 : 3,
                                              r.diagram.arc_count, RectangleScope::FullRange);
      CHECK(!full_scope.is_ghost);
    }
  }
}

TEST_CASE("T(4,5) has a ghost character") {
  auto r = compute_f2(torus_braid(4, 5), true);
  int ghosts = 0;
  for (const auto& pt : r.points)
    if (classify_ghost(pt, 4, 15).is_ghost) ++ghosts;
  CHECK(ghosts >= 1);
}
