#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "ghost/f2.hpp"
#include "ghost/slice.hpp"
#include "oracles.hpp"

using namespace ghost;

namespace {
MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }

const F2Result& t56() {
  static F2Result r = compute_f2(torus_braid(5, 6), /*lift_full=*/true);
  return r;
}

const F2Point* find_point(const F2Result& r, double a, double b) {
  for (const auto& pt : r.points)
    if (std::abs(pt.reduced[0] - Cpx(a, 0)) < 1e-8 && std::abs(pt.reduced[1] - Cpx(b, 0)) < 1e-8)
      return &pt;
  return nullptr;
}
}

TEST_CASE("fundamental relation family") {
  auto d = braid_closure(torus_braid(5, 6));
  auto rels = generate_f2_relations(d);
  CHECK(rels.relation_count() == 24u * 24u);

  // x_{a6} = x12 x_{a1} - x_{a2} for every a
  const Crossing* c6 = nullptr;
  const Crossing* c17 = nullptr;
  for (const auto& c : rels.crossings) {
    if (c.out_under_arc == 6) c6 = &c;
    if (c.out_under_arc == 17) c17 = &c;
  }
  REQUIRE(c6);
  REQUIRE(c17);
  CHECK(rels.relation_poly(7, *c6) == P("x12*x17 - x27 - x67"));
  CHECK(rels.relation_poly(3, *c6) == P("x12*x13 - x23 - x36"));
  // x_{a17} = x_{6,10} x_{a10} - x_{a6}
  CHECK(rels.relation_poly(2, *c17) == P("x6_10*x2_10 - x26 - x2_17"));

  auto tre = generate_f2_relations(braid_closure(torus_braid(2, 3)));
  CHECK(tre.relation_count() == 9);
}

TEST_CASE("trefoil elimination gives the frozen seed system") {
  auto rels = generate_f2_relations(braid_closure(torus_braid(2, 3)));
  auto [chain, rp] = eliminate_to_seed(rels, 2);
  CHECK(chain.eliminated().size() == 2);  // x13, x23
  REQUIRE(rp.variables == std::vector<std::string>{"x12"});
  REQUIRE(rp.defining.size() == 2);
  CHECK(rp.defining[0] == P("x12^3 - 3*x12 - 2"));
  CHECK(rp.defining[1] == P("x12^2 - x12 - 2"));
}

TEST_CASE("T(5,6) chain covers every eliminated symbol") {
  const auto& r = t56();
  CHECK(r.chain.eliminated().size() == 266);  // C(24,2) - C(5,2)
  // replaying the chain numerically matches the exact seed polynomials
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<PairSym, Cpx> seed;
  std::map<std::string, Cpx> by_name;
  for (const auto& s : r.presentation.seeds) {
    Cpx v(u(rng), u(rng));
    seed[s] = v;
    by_name[s.name()] = v;
  }
  for (const auto& s : {PairSym(1, 24), PairSym(7, 19), PairSym(23, 24)}) {
    Cpx via_replay = r.chain.replay(s, seed);
    Cpx via_poly = r.chain.seed_poly(s).eval_complex(by_name);
    CHECK(std::abs(via_replay - via_poly) < 1e-9 * std::max(1.0, std::abs(via_poly)));
  }
}

TEST_CASE("symmetry reduction") {
  const auto& r = t56();
  REQUIRE(r.presentation.symmetry_applied);
  REQUIRE(r.presentation.classes);
  const auto& cls = r.presentation.classes->classes;
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].size() == 5);
  CHECK(cls[1].size() == 5);
  CHECK(r.presentation.variables == std::vector<std::string>{"x12", "x13"});

  // the reference reduced system appears verbatim among the deduplicated
  // defining polynomials (a = x12, b = x13)
  std::map<std::string, MultiPoly> rename{{"a", P("x12")}, {"b", P("x13")}};
  for (const auto& fixture : oracle::t56_defining_fixtures()) {
    MultiPoly expect = P(fixture).substitute(rename);
    bool found = false;
    for (const auto& d : r.presentation.defining)
      if (d == expect) found = true;
    CHECK(found);
  }

  // T(4,5): orbits {x12,x23,x34,x14} and {x13,x24}
  auto r45 = compute_f2(torus_braid(4, 5), false);
  REQUIRE(r45.presentation.classes);
  const auto& cls45 = r45.presentation.classes->classes;
  REQUIRE(cls45.size() == 2);
  CHECK(cls45[0].size() == 4);
  CHECK(cls45[1].size() == 2);
  CHECK(cls45[0].front() == PairSym(1, 2));
  CHECK(cls45[1].front() == PairSym(1, 3));

  // trefoil: single seed pair, reduction does not apply
  auto r23 = compute_f2(torus_braid(2, 3), false);
  CHECK(!r23.presentation.symmetry_applied);
}

TEST_CASE("trefoil solve") {
  auto r = compute_f2(torus_braid(2, 3), true);
  REQUIRE(r.points.size() == 2);
  CHECK(std::abs(r.points[0].reduced[0] - Cpx(-1, 0)) < 1e-10);
  CHECK(std::abs(r.points[1].reduced[0] - Cpx(2, 0)) < 1e-10);
  for (const auto& pt : r.points) {
    REQUIRE(pt.reduced_exact);
    CHECK((*pt.reduced_exact)[0].is_rational());
  }
}

TEST_CASE("T(5,6) solve finds the ten reference points") {
  const auto& r = t56();
  REQUIRE(r.points.size() == 10);
  const double s5 = std::sqrt(5.0);
  // (a, b) pairs: four rational plus three conjugate quadratic families
  std::vector<std::pair<double, double>> expected = {
      {2, 2},
      {0, -1},
      {1, 1},
      {-2, 1},
      {(5 + s5) / 2, -1 + (5 + s5)},
      {(5 - s5) / 2, -1 + (5 - s5)},
      {(1 + s5) / 2, 1},
      {(1 - s5) / 2, 1},
      {(-1 + s5) / 2, -1 - (-1 + s5) / 2},
      {(-1 - s5) / 2, -1 - (-1 - s5) / 2},
  };
  for (auto [a, b] : expected) CHECK(find_point(r, a, b) != nullptr);

  // exact minimal polynomials recovered for the quadratic points
  const F2Point* q = find_point(r, (5 + s5) / 2, 4 + s5);
  REQUIRE(q);
  REQUIRE(q->ext);
  CHECK(q->ext->s == Rat(5));
  CHECK(q->ext->t == Rat(-5));  // z^2 = 5z - 5
  REQUIRE(q->reduced_exact);
  CHECK((*q->reduced_exact)[0] == QuadVal{Rat(0), Rat(1)});   // a = r
  CHECK((*q->reduced_exact)[1] == QuadVal{Rat(-1), Rat(2)});  // b = -1 + 2r
}

TEST_CASE("solution set is stable under reordering the defining polynomials") {
  ReducedPresentation rp = t56().presentation;
  std::mt19937_64 rng(17);
  std::shuffle(rp.defining.begin(), rp.defining.end(), rng);
  auto pts = solve_reduced(rp);
  REQUIRE(pts.size() == t56().points.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(pts[i].reduced[0] - t56().points[i].reduced[0]) < 1e-9);
    CHECK(std::abs(pts[i].reduced[1] - t56().points[i].reduced[1]) < 1e-9);
  }
}

TEST_CASE("lifted coordinates satisfy every fundamental relation") {
  const auto& r = t56();
  for (const auto& pt : r.points) {
    REQUIRE(pt.full);
    CHECK(pt.full_residual_max >= 0);
    CHECK(pt.full_residual_max <= kRelationTol);
  }
  // spot checks from the reference patterns
  const F2Point* p11 = find_point(r, 1, 1);
  REQUIRE(p11);
  for (const auto& s : r.presentation.seeds)
    CHECK(std::abs(p11->seed.at(s) - Cpx(1, 0)) < 1e-12);
  const F2Point* p0 = find_point(r, 0, -1);
  REQUIRE(p0);
  CHECK(std::abs(p0->seed.at(PairSym(4, 5)) - Cpx(0, 0)) < 1e-12);   // class of x12
  CHECK(std::abs(p0->seed.at(PairSym(2, 5)) - Cpx(-1, 0)) < 1e-12);  // class of x13
  const F2Point* p22 = find_point(r, 2, 2);
  REQUIRE(p22);
  for (const auto& [s, v] : *p22->full) CHECK(std::abs(v - Cpx(2, 0)) < 1e-9);
}

TEST_CASE("symmetry classes are consequences: reduced solutions satisfy the unreduced system") {
  auto rels = generate_f2_relations(braid_closure(torus_braid(5, 6)));
  auto [chain, rp0] = eliminate_to_seed(rels, 5);
  (void)chain;
  for (const auto& pt : t56().points) {
    std::map<std::string, Cpx> vals;
    for (const auto& [s, v] : pt.seed) vals[s.name()] = v;
    for (const auto& d : rp0.defining) CHECK(std::abs(d.eval_complex(vals)) <= kRelationTol);
  }
}

TEST_CASE("figure-eight goes through the lex elimination path") {
  auto r = compute_f2(parse_braid("braid:3:1 -2 1 -2"), true);
  CHECK(!r.presentation.symmetry_applied);
  CHECK(r.presentation.variables.size() == 3);
  CHECK(r.points.size() == 3);
  for (const auto& pt : r.points) CHECK(pt.full_residual_max <= kRelationTol);
}

TEST_CASE("positive-dimensional systems are reported, not sampled") {
  ReducedPresentation rp;
  rp.m = 3;
  rp.var_pairs = {PairSym(1, 2), PairSym(1, 3)};
  rp.variables = {"x12", "x13"};
  rp.defining = {P("x12*x13 - 1")};  // a hyperbola, not a finite set
  CHECK_THROWS_AS(solve_reduced(rp), InternalError);
}

TEST_CASE("T(3,4) solves and has no ghosts (bridge index 3)") {
  auto r = compute_f2(torus_braid(3, 4), true);
  CHECK(!r.points.empty());
  for (const auto& pt : r.points) {
    CHECK(pt.full_residual_max <= kRelationTol);
    CHECK(!classify_ghost(pt, 3, r.diagram.arc_count).is_ghost);
  }
}
