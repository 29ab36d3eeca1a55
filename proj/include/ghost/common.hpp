#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ghost {

using Rat = mpq_class;
using Int = mpz_class;
using Cpx = std::complex<double>;

// default numeric tolerances; overridable through RunConfig where it matters
inline constexpr double kRelationTol = 1e-8;   // fundamental-relation / witness residuals
inline constexpr double kSolveTol = 1e-10;     // defining-polynomial residuals at solutions
inline constexpr double kRootResidual = 1e-10; // scaled residual bound for root finding
inline constexpr double kMatTol = 1e-9;        // relator images vs identity

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Quadratic extension Q[r]/(r^2 - s r - t), with the numeric root this point uses.
struct QuadCtx {
  Rat s, t;
  Cpx root_approx{0.0, 0.0};

  bool same_field(const QuadCtx& o) const { return s == o.s && t == o.t; }
  std::string minpoly_string() const; // "z^2 - s*z - t" rendered with exact coefficients
};

// u + v*r in the ambient QuadCtx; v == 0 means plain rational.
struct QuadVal {
  Rat u, v;

  QuadVal() : u(0), v(0) {}
  QuadVal(Rat uu) : u(std::move(uu)), v(0) {}
  QuadVal(Rat uu, Rat vv) : u(std::move(uu)), v(std::move(vv)) {}

  bool is_zero() const { return u == 0 && v == 0; }
  bool is_rational() const { return v == 0; }
  bool operator==(const QuadVal& o) const { return u == o.u && v == o.v; }
};

inline QuadVal qadd(const QuadVal& a, const QuadVal& b) { return {a.u + b.u, a.v + b.v}; }
inline QuadVal qsub(const QuadVal& a, const QuadVal& b) { return {a.u - b.u, a.v - b.v}; }
inline QuadVal qneg(const QuadVal& a) { return {-a.u, -a.v}; }
inline QuadVal qmul(const QuadVal& a, const QuadVal& b, const QuadCtx& c) {
  // (u1 + v1 r)(u2 + v2 r), r^2 = s r + t
  return {a.u * b.u + a.v * b.v * c.t, a.u * b.v + a.v * b.u + a.v * b.v * c.s};
}
inline QuadVal qscale(const QuadVal& a, const Rat& k) { return {a.u * k, a.v * k}; }
inline Cpx qapprox(const QuadVal& a, const QuadCtx& c) {
  return Cpx(to_double(a.u), 0.0) + Cpx(to_double(a.v), 0.0) * c.root_approx;
}

std::string rat_string(const Rat& r);

// Continued-fraction rationalization: nearest p/q with q <= max_den, or nullopt
// if no such fraction approximates x within tol.
std::optional<Rat> rationalize(double x, double tol = 1e-9, unsigned long max_den = 1000000);

}  // namespace ghost
