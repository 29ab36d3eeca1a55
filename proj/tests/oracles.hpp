#pragma once

// test-only oracles and fixtures, independent of the implementation paths
// they check

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ghost/cover.hpp"
#include "ghost/mat2.hpp"
#include "ghost/poly.hpp"

namespace oracle {

using namespace ghost;

// ---------------------------------------------------------------------------
// reference fixtures for the (5,6)-torus knot

// the five defining polynomials of the reduced system, a = x12, b = x13
inline std::vector<std::string> t56_defining_fixtures() {
  return {
      "a^6-5*a^4*b+4*a^3*b+6*a^2*b^2-3*a^3-6*a*b^2-b^3+2*a*b+b^2+3*a-2",
      "a^7-5*a^5*b-a^5+4*a^4*b+6*a^3*b^2-3*a^4+4*a^3*b-6*a^2*b^2-a*b^3-a^2*b-2*a*b^2+5*a^2+2*b^2-a-2",
      "a^5*b-a^4*b-4*a^3*b^2+a^4+6*a^2*b^2+3*a*b^3-4*a^2*b-2*a*b^2-3*b^3-a^2+2*a*b-a+3*b",
      "a^6*b-a^6-5*a^4*b^2+4*a^4*b+4*a^3*b^2+6*a^2*b^3+a^4-6*a^3*b-3*a^2*b^2-6*a*b^3-b^4+2*a^3-3*a^2*b"
      "+4*a*b^2+b^3+5*a*b+b^2-3*a-b",
      "a^5*b-a^5-4*a^3*b^2+3*a^3*b+3*a^2*b^2+3*a*b^3+a^3-4*a^2*b-a*b^2-2*b^3+a^2-2*a*b+2*b"};
}

// the eight relators of the 2-fold branched cover group, in the letters
// x = m1m2, y = m1m3, z = m1m4, w = m1m5
inline std::vector<std::string> t56_cover_relator_fixtures() {
  return {"w^-1 x^-1 y z^-1 w x^-1 w z^-1 y x^-1 w^-1",
          "w^-1 x^-1 y z^-1 w y^-1 w z^-1 y x^-1 w^-1 x",
          "w^-1 x^-1 y z^-1 w z^-1 w z^-1 y x^-1 w^-1 y",
          "w^-1 x^-1 y z^-1 w z^-1 y x^-1 w^-1 z",
          "w x y^-1 z w^-1 x w^-1 z y^-1 x w",
          "w x y^-1 z w^-1 y w^-1 z y^-1 x w x^-1",
          "w x y^-1 z w^-1 z w^-1 z y^-1 x w y^-1",
          "w x y^-1 z w^-1 z y^-1 x w z^-1"};
}

// the oriented Wirtinger data (over, under-in, under-out) read off the
// conjugation relations m6 = m1 m2 m1^-1, ..., m4 = m5 m18 m5^-1
inline std::vector<std::array<int, 3>> t56_crossing_fixtures() {
  return {{1, 2, 6},    {1, 3, 7},    {1, 4, 8},    {1, 5, 9},    {6, 7, 10},  {6, 8, 11},
          {6, 9, 12},   {6, 1, 13},   {10, 11, 14}, {10, 12, 15}, {10, 13, 16}, {10, 6, 17},
          {14, 15, 18}, {14, 16, 19}, {14, 17, 20}, {14, 10, 21}, {18, 19, 5},  {18, 20, 22},
          {18, 21, 23}, {18, 14, 24}, {5, 22, 1},   {5, 23, 2},   {5, 24, 3},   {5, 18, 4}};
}

// ---------------------------------------------------------------------------
// helpers

// parse "w^-1 x^-1 y ..." over the given generator names
inline GroupWord parse_word(const std::vector<std::string>& names, const std::string& text) {
  GroupWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    auto caret = tok.find('^');
    std::string base = tok;
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      exp = std::stoi(tok.substr(caret + 1));
    }
    int idx = -1;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == base) idx = static_cast<int>(i) + 1;
    if (idx < 0) throw std::runtime_error("parse_word: unknown letter " + base);
    if (exp != 1 && exp != -1) throw std::runtime_error("parse_word: exponent out of range");
    w.append(idx, exp);
  }
  return w;
}

// |Delta_{T(p,q)}(-1)| through the closed form
// (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), evaluated after exact division
inline long torus_alexander_det(int p, int q) {
  auto tpow = [](int k) {
    std::vector<Rat> c(static_cast<size_t>(k + 1), Rat(0));
    c[static_cast<size_t>(k)] = 1;
    c[0] = -1;
    return MultiPoly::from_uni_coeffs("t", c);  // t^k - 1
  };
  MultiPoly num = tpow(p * q) * tpow(1);
  MultiPoly den = tpow(p) * tpow(q);
  MultiPoly delta = divexact(num, den);
  Rat v = delta.eval_rat({{"t", Rat(-1)}});
  Rat av = abs(v);
  return static_cast<long>(av.get_num().get_si());
}

inline Mat2 random_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Cpx a, b, c;
  do {
    a = Cpx(d(rng), d(rng));
  } while (std::abs(a) < 0.2);
  b = Cpx(d(rng), d(rng));
  c = Cpx(d(rng), d(rng));
  Cpx dd = (Cpx(1, 0) + b * c) / a;
  return {a, b, c, dd};
}

// independent 4x4 determinant by cofactor expansion
inline Cpx det4_direct(const std::array<std::array<Cpx, 4>, 4>& m) {
  auto det3 = [](Cpx a, Cpx b, Cpx c, Cpx d, Cpx e, Cpx f, Cpx g, Cpx h, Cpx i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  };
  Cpx acc(0, 0);
  int sign = 1;
  for (int col = 0; col < 4; ++col) {
    Cpx minor[9];
    int k = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) minor[k++] = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
    acc += static_cast<double>(sign) * m[0][static_cast<size_t>(col)] *
           det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5], minor[6], minor[7],
                minor[8]);
    sign = -sign;
  }
  return acc;
}

}  // namespace oracle
