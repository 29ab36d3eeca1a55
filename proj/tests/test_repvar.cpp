#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ghost/repvar.hpp"
#include "oracles.hpp"

using namespace ghost;

namespace {
struct Ctx {
  F2Result f2 = compute_f2(torus_braid(5, 6), true);
  GroupPresentation cover =
      branched_cover_presentation(tietze_reduce(wirtinger_presentation(f2.diagram), 5));
  KnotContext knot{"torus:5,6", 5, cover};
};

const Ctx& ctx() {
  static Ctx c;
  return c;
}

const F2Point& point_at(double a, double b) {
  for (const auto& pt : ctx().f2.points)
    if (std::abs(pt.reduced[0] - Cpx(a, 0)) < 1e-8 && std::abs(pt.reduced[1] - Cpx(b, 0)) < 1e-8)
      return pt;
  throw std::runtime_error("point not found");
}
}

TEST_CASE("trace system for (1,1): normalization and consequences") {
  TraceSystem ts = build_trace_system(point_at(1, 1), 5, &ctx().cover);
  CHECK(ts.normalized == 2);
  CHECK(ts.cases.size() == 1);
  CHECK(ts.variables.front() == "a");

  // the normalization constraints already force a^2 - a + 1 = 0
  std::vector<MultiPoly> norm{ts.base[0]};  // det of the diagonal generator
  auto gb = buchberger(Ideal(norm), MonomialOrder::grevlex({"a"}));
  CHECK(normal_form(MultiPoly::parse("a^2 - a + 1"), gb).is_zero());

  // the staged linear solve b3 = (1 + a)/3 follows from the X2/X3 block
  std::vector<MultiPoly> block{ts.base[0], ts.base[1], ts.base[4]};
  // base layout: dets for X2..X5 then pairs (2,3),(2,4),(2,5),(3,4),(3,5),(4,5)
  auto gb2 = buchberger(Ideal(block), MonomialOrder::grevlex(ts.variables));
  CHECK(normal_form(MultiPoly::parse("3*b3 - 1 - a"), gb2).is_zero());
}

TEST_CASE("emptiness: (1,1) is contradictory on the pairwise traces alone") {
  TraceSystem ts = build_trace_system(point_at(1, 1), 5, &ctx().cover);
  EmptinessCertificate cert = emptiness_check(ts);
  CHECK(cert.conclusive);
  CHECK(cert.empty);
  REQUIRE(cert.cases.size() == 1);
  CHECK(cert.cases[0].contains_one);
  CHECK(!cert.cases[0].used_relators);  // stage 1 sufficed
}

TEST_CASE("derivation trace reduces the staged identities to zero") {
  TraceSystem ts = build_trace_system(point_at(1, 1), 5, &ctx().cover);
  auto stages = derivation_trace(ts);
  REQUIRE(stages.size() == 8);
  for (const auto& [p, nf] : stages) CHECK(nf.is_zero());
  CHECK(stages[3].first == MultiPoly::parse("c3*d3 + 2/3"));
  CHECK(stages[6].first == MultiPoly::parse("2*c4^2 - c3*c4 + 2*c3^2"));
  CHECK(stages[7].first == MultiPoly::parse("c3^2"));
}

TEST_CASE("the (-2,1) system needs the case split and stays satisfiable") {
  TraceSystem ts = build_trace_system(point_at(-2, 1), 5, &ctx().cover);
  CHECK(ts.normalized == 3);      // x12 = -2 forces normalization on X3
  CHECK(ts.cases.size() == 9);    // covering split over X2 and X5
  EmptinessCertificate cert = emptiness_check(ts);
  CHECK(cert.conclusive);
  // the identity cases are contradictory, the generic parabolic case is not,
  // even after adjoining every relator image
  CHECK(!cert.empty);
  bool some_relator_case = false;
  for (const auto& c : cert.cases)
    if (c.used_relators && !c.contains_one) some_relator_case = true;
  CHECK(some_relator_case);
}

TEST_CASE("all-twos point admits the identity representation") {
  TraceSystem ts = build_trace_system(point_at(2, 2), 5, &ctx().cover);
  CHECK(ts.normalized == 0);  // every target trace is +-2
  EmptinessCertificate cert = emptiness_check(ts);
  CHECK(cert.conclusive);
  CHECK(!cert.empty);
  // the first processed case is the all-identity one
  REQUIRE(!cert.cases.empty());
  CHECK(!cert.cases[0].contains_one);
}

TEST_CASE("witness verification") {
  auto witness = stored_witness_t56_0m1();
  RepWitness w = verify_witness(witness, ctx().cover, point_at(0, -1));
  CHECK(w.accepted);
  CHECK(w.det_residual <= 1e-10);
  CHECK(w.trace_residual <= 1e-9);
  CHECK(w.relator_residual <= 1e-9);

  // pairwise traces match the reference values
  CHECK(std::abs(witness[0].trace() - Cpx(0, 0)) < 1e-12);
  CHECK(std::abs(witness[1].trace() - Cpx(-1, 0)) < 1e-12);
  CHECK(std::abs(witness[2].trace() - Cpx(-1, 0)) < 1e-12);
  CHECK(std::abs(witness[3].trace() - Cpx(0, 0)) < 1e-12);
  CHECK(std::abs((witness[0].inv_det1() * witness[1]).trace() - Cpx(0, 0)) < 1e-12);  // x23
}

TEST_CASE("identity matrices pass against the all-twos point") {
  std::vector<Mat2> id(4, Mat2::identity());
  RepWitness w = verify_witness(id, ctx().cover, point_at(2, 2));
  CHECK(w.accepted);
}

TEST_CASE("witness/emptiness exclusivity") {
  // the stored witness cannot be accepted for the point whose system is
  // certified empty
  RepWitness w = verify_witness(stored_witness_t56_0m1(), ctx().cover, point_at(1, 1));
  CHECK(!w.accepted);
  CHECK(!w.failure.empty());
}

TEST_CASE("witness conjugation invariance") {
  std::mt19937_64 rng(2024);
  auto witness = stored_witness_t56_0m1();
  for (int trial = 0; trial < 5; ++trial) {
    Mat2 g = oracle::random_sl2(rng);
    std::vector<Mat2> conj;
    for (const auto& X : witness) conj.push_back(g * X * g.inv_det1());
    RepWitness w = verify_witness(conj, ctx().cover, point_at(0, -1));
    CHECK(w.accepted);
  }
}

TEST_CASE("preimage verdicts for the three ghosts") {
  auto rep11 = preimage_report(point_at(1, 1), true, ctx().knot);
  CHECK(rep11.verdict == PreimageReport::Verdict::Empty);
  REQUIRE(rep11.certificate);
  CHECK(rep11.certificate->empty);

  auto rep0 = preimage_report(point_at(0, -1), true, ctx().knot);
  CHECK(rep0.verdict == PreimageReport::Verdict::InImage);
  REQUIRE(rep0.witness);
  CHECK(rep0.witness->accepted);

  auto rep2 = preimage_report(point_at(-2, 1), true, ctx().knot);
  CHECK(rep2.verdict == PreimageReport::Verdict::InImage);
  REQUIRE(rep2.witness);
  CHECK(rep2.witness->accepted);
  CHECK(rep2.witness->relator_residual <= 1e-9);

  auto non_ghost = preimage_report(point_at(2, 2), false, ctx().knot);
  CHECK(non_ghost.verdict == PreimageReport::Verdict::InImage);
}

TEST_CASE("falsification harness finds nothing for the certified-empty system") {
  TraceSystem ts = build_trace_system(point_at(1, 1), 5, &ctx().cover);
  auto hit = numeric_solution_search(ts.case_generators(0), ts.variables, 1000, 424242);
  CHECK(!hit.has_value());
  auto hit2 = numeric_preimage_search(ts, 250, 424242);
  CHECK(!hit2.has_value());
}

TEST_CASE("falsification harness positive control on the satisfiable systems") {
  TraceSystem t0 = build_trace_system(point_at(0, -1), 5, &ctx().cover);
  auto hit = numeric_preimage_search(t0, 500, 7);
  REQUIRE(hit.has_value());
  RepWitness w = verify_witness(matrices_at(t0, *hit), ctx().cover, point_at(0, -1));
  CHECK(w.accepted);

  TraceSystem t2 = build_trace_system(point_at(-2, 1), 5, &ctx().cover);
  auto hit2 = numeric_preimage_search(t2, 500, 7);
  REQUIRE(hit2.has_value());
  RepWitness w2 = verify_witness(matrices_at(t2, *hit2), ctx().cover, point_at(-2, 1));
  CHECK(w2.accepted);
}

TEST_CASE("resource caps surface as inconclusive, never as a verdict") {
  TraceSystem ts = build_trace_system(point_at(1, 1), 5, &ctx().cover);
  BuchbergerCaps caps;
  caps.max_pairs = 2;
  EmptinessCertificate cert = emptiness_check(ts, caps);
  CHECK(!cert.conclusive);
  CHECK(!cert.empty);
}

TEST_CASE("quadratic targets are handled by adjoining the minimal polynomial") {
  // the golden-ratio point (r, 1) with r^2 = r + 1 is a non-ghost, so its
  // trace system is satisfiable; the targets live in a quadratic field
  const F2Point& pt = point_at(1.6180339887498949, 1);
  TraceSystem ts = build_trace_system(pt, 5, &ctx().cover);
  REQUIRE(ts.ext);
  CHECK(ts.ext->s == Rat(1));
  CHECK(ts.ext->t == Rat(1));
  CHECK(std::count(ts.variables.begin(), ts.variables.end(), "r") == 1);
  EmptinessCertificate cert = emptiness_check(ts);
  CHECK(cert.conclusive);
  CHECK(!cert.empty);
}

TEST_CASE("points without exact coordinates are rejected by the exact layer") {
  F2Point fake;
  fake.reduced = {Cpx(0.123, 0), Cpx(1.5, 0)};
  CHECK_THROWS_AS(build_trace_system(fake, 5, &ctx().cover), InternalError);
}
