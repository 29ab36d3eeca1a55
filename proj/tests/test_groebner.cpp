#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ghost/groebner.hpp"
#include "ghost/resultant.hpp"

using namespace ghost;

namespace {
MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }

Ideal I(std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> v;
  for (const char* g : gens) v.push_back(P(g));
  return Ideal(std::move(v));
}
}

TEST_CASE("already reduced system stays put") {
  auto gb = buchberger(I({"x", "y"}), MonomialOrder::lex({"x", "y"}));
  REQUIRE(gb.basis.size() == 2);
  CHECK(gb.basis[0] == P("y"));
  CHECK(gb.basis[1] == P("x"));
}

TEST_CASE("common root structure collapses") {
  auto gb = buchberger(I({"x^2-1", "x-1"}), MonomialOrder::grevlex());
  REQUIRE(gb.basis.size() == 1);
  CHECK(gb.basis[0] == P("x-1"));
}

TEST_CASE("inconsistent linear system yields {1}") {
  // x+y = 0, x-y = 0 force x = y = 0, contradicting x = -1
  auto gb = buchberger(I({"x+y", "x-y", "x+1"}), MonomialOrder::grevlex());
  CHECK(ideal_contains_one(gb));
}

TEST_CASE("ideal_contains_one") {
  CHECK(ideal_contains_one(buchberger(I({"1"}), MonomialOrder::grevlex())));
  CHECK(!ideal_contains_one(buchberger(I({"x-1"}), MonomialOrder::grevlex())));
  // a = 2 fails a^2-a+1 = 3 != 0; cross-checked by the resultant below
  auto gb = buchberger(I({"a^2-a+1", "a-2"}), MonomialOrder::grevlex());
  CHECK(ideal_contains_one(gb));
  MultiPoly res = resultant(P("a^2-a+1"), P("a-2"), "a");
  REQUIRE(res.is_constant());
  CHECK(res.constant_value() != 0);
}

TEST_CASE("normal form: idempotent and kills generators") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 2);
  auto random_poly = [&](const std::vector<std::string>& vars) {
    MultiPoly acc;
    for (int t = 0; t < 4; ++t) {
      MultiPoly term = MultiPoly::constant(Rat(coeff(rng)));
      for (const auto& v : vars) term = term * MultiPoly::var(v).pow(static_cast<unsigned>(deg(rng)));
      acc += term;
    }
    return acc;
  };
  std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 3; ++g) {
      MultiPoly p = random_poly(vars);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    Ideal ideal(gens);
    auto gb = buchberger(ideal, MonomialOrder::grevlex({"x", "y", "z"}));
    for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    MultiPoly probe = random_poly(vars);
    MultiPoly nf = normal_form(probe, gb);
    CHECK(normal_form(nf, gb) == nf);
  }
}

TEST_CASE("reduced basis is deterministic under generator reordering") {
  std::vector<const char*> gens{"x^2+y^2-1", "x*y-1/2", "x+y^2"};
  auto gb1 = buchberger(I({"x^2+y^2-1", "x*y-1/2", "x+y^2"}), MonomialOrder::grevlex({"x", "y"}));
  auto gb2 = buchberger(I({"x+y^2", "x^2+y^2-1", "x*y-1/2"}), MonomialOrder::grevlex({"x", "y"}));
  REQUIRE(gb1.basis.size() == gb2.basis.size());
  for (size_t i = 0; i < gb1.basis.size(); ++i) CHECK(gb1.basis[i] == gb2.basis[i]);
}

TEST_CASE("lex elimination exposes the univariate generator") {
  // circle and line: eliminating x must land on a poly in y alone
  auto gb = buchberger(I({"x^2+y^2-4", "x-y"}), MonomialOrder::lex({"x", "y"}));
  bool found = false;
  for (const auto& g : gb.basis) {
    if (g.degree_in("x") == 0 && g.degree_in("y") > 0) {
      found = true;
      CHECK(g == P("y^2-2"));
    }
  }
  CHECK(found);
}

TEST_CASE("bases are fully inter-reduced") {
  auto gb = buchberger(I({"x^2+y^2-1", "x*y-1/2", "x+y^2"}), MonomialOrder::grevlex({"x", "y"}));
  for (const auto& g : gb.basis) CHECK(!g.is_zero());
  // every element is already in normal form with respect to the others
  for (size_t i = 0; i < gb.basis.size(); ++i) {
    GroebnerBasis rest{{}, gb.order, gb.ring};
    for (size_t j = 0; j < gb.basis.size(); ++j)
      if (j != i) rest.basis.push_back(gb.basis[j]);
    CHECK(normal_form(gb.basis[i], rest) == gb.basis[i]);
  }
}

TEST_CASE("ideal and basis JSON") {
  Ideal ideal({MultiPoly::parse("x^2-1"), MultiPoly::parse("x*y")});
  std::string ji = ideal_to_json(ideal);
  CHECK(ji.find("x^2 - 1") != std::string::npos);
  auto gb = buchberger(ideal, MonomialOrder::grevlex({"x", "y"}));
  std::string jb = basis_to_json(gb);
  CHECK(jb.find("\"order\":\"grevlex\"") != std::string::npos);
  CHECK(jb.find("\"basis\"") != std::string::npos);
}

TEST_CASE("resource caps raise explicit errors") {
  BuchbergerCaps caps;
  caps.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(I({"x^3-2*y*x+1", "y^2-x+3", "x*y-x-1"}),
                             MonomialOrder::grevlex(), caps),
                  ResourceCapError);
  BuchbergerCaps dcaps;
  dcaps.max_degree = 2;
  CHECK_THROWS_AS(buchberger(I({"x^3-2*y*x+1", "y^3-x+3", "x*y-x-1"}),
                             MonomialOrder::grevlex(), dcaps),
                  ResourceCapError);
}
