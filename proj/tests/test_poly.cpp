#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ghost/poly.hpp"

using namespace ghost;

namespace {
MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }
}

TEST_CASE("ring arithmetic") {
  CHECK(P("x+1") * P("x-1") == P("x^2-1"));
  CHECK(P("a^2-a+1") + P("a-1") == P("a^2"));
  CHECK(P("a+b") * P("a+b") == P("a^2+2*a*b+b^2"));
  CHECK((P("x") - P("x")).is_zero());
}

TEST_CASE("parser handles rationals, powers, parens, whitespace") {
  CHECK(P("3/2*x^2 - 1/2") * P("2") == P("3*x^2-1"));
  CHECK(P("(x+y)^2") == P("x^2+2*x*y+y^2"));
  CHECK(P("-x - 1") == -P("x+1"));
  CHECK(P("-(x+1)") == -P("x+1"));
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("to_string round-trips") {
  for (const char* s : {"x^2-1", "a^2+2*a*b+b^2", "3/2*x*y - z + 1/7", "0", "-x13^3+x12"}) {
    MultiPoly p = P(s);
    CHECK(MultiPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("substitute") {
  // simultaneous variable renames
  MultiPoly p = P("x14*x23");
  CHECK(p.substitute({{"x14", P("x13")}, {"x23", P("x12")}}) == P("x13*x12"));
  CHECK(P("x^2").substitute({{"x", P("0")}}).is_zero());
  // a crossing relation used as a rewrite
  MultiPoly target = MultiPoly::var("x14_24");
  MultiPoly rhs = P("x14_18*xa18 - xa14");
  CHECK(target.substitute({{"x14_24", rhs}}) == rhs);
  // substitution into powers expands exactly
  CHECK(P("y^3").substitute({{"y", P("x+1")}}) == P("x^3+3*x^2+3*x+1"));
}

TEST_CASE("degrees, content, primitive part") {
  MultiPoly p = P("4*x^2*y - 6*x");
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in("x") == 2);
  CHECK(p.degree_in("y") == 1);
  CHECK(p.degree_in("z") == 0);
  CHECK(p.content() == Rat(2));
  CHECK(p.primitive_part() == P("2*x^2*y - 3*x"));
  CHECK(P("-1/2*x + 1/4").primitive_part() == P("2*x-1"));
}

TEST_CASE("derivative") {
  CHECK(P("x^3*y - x*y^2").derivative("x") == P("3*x^2*y - y^2"));
  CHECK(P("x^3").derivative("y").is_zero());
}

TEST_CASE("divexact") {
  CHECK(divexact(P("x^2-y^2"), P("x-y")) == P("x+y"));
  CHECK(divexact(P("6*x^2"), P("3")) == P("2*x^2"));
  CHECK_THROWS_AS(divexact(P("x^2+1"), P("x-1")), InternalError);
}

TEST_CASE("complex and rational evaluation agree") {
  MultiPoly p = P("x^2*y - 3/2*y + 2");
  Rat exact = p.eval_rat({{"x", Rat(3)}, {"y", Rat(1, 2)}});
  CHECK(exact == Rat(9, 2) - Rat(3, 4) + 2);
  Cpx approx = p.eval_complex({{"x", Cpx(3, 0)}, {"y", Cpx(0.5, 0)}});
  CHECK(std::abs(approx - Cpx(to_double(exact), 0)) < 1e-12);
}

TEST_CASE("quadratic-field evaluation is exact") {
  // r^2 = r + 1
  QuadCtx ctx{Rat(1), Rat(1), Cpx(1.6180339887498949, 0)};
  MultiPoly p = P("x^2 - x - 1");
  CHECK(p.eval_quad({{"x", QuadVal{Rat(0), Rat(1)}}}, ctx).is_zero());
  QuadVal v = qmul(QuadVal{Rat(1), Rat(1)}, QuadVal{Rat(1), Rat(1)}, ctx);
  CHECK(v == QuadVal{Rat(2), Rat(3)});
}

TEST_CASE("univariate helpers") {
  auto q = uni_divmod({Rat(-1), Rat(0), Rat(1)}, {Rat(-1), Rat(1)});  // (x^2-1)/(x-1)
  CHECK(q.first == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(q.second.empty());
  auto g = uni_gcd({Rat(-1), Rat(0), Rat(1)}, {Rat(-1), Rat(1)});
  CHECK(g == std::vector<Rat>{Rat(-1), Rat(1)});
  CHECK(uni_derivative({Rat(5), Rat(3), Rat(2)}) == std::vector<Rat>{Rat(3), Rat(4)});
}

TEST_CASE("rationalize recovers small fractions") {
  CHECK(*rationalize(0.5) == Rat(1, 2));
  CHECK(*rationalize(-2.0 / 3.0) == Rat(-2, 3));
  CHECK(*rationalize(3.0) == Rat(3));
  CHECK(!rationalize(1.2345678912345e-2, 1e-12, 1000).has_value());
}
