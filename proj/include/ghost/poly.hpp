#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ghost/common.hpp"

namespace ghost {

// Sparse multivariate polynomial over Q. Variables are kept as a sorted,
// shared name list; exponent vectors are aligned with it. Terms live in a
// map keyed by exponent vector, so the representation is canonical and
// independent of any monomial order.
class MultiPoly {
 public:
  using Expo = std::vector<unsigned>;
  using TermMap = std::map<Expo, Rat>;

  MultiPoly();
  static MultiPoly constant(const Rat& c);
  static MultiPoly var(const std::string& name);
  static MultiPoly parse(const std::string& text);

  const std::vector<std::string>& vars() const { return *vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  unsigned total_degree() const;
  unsigned degree_in(const std::string& name) const;
  bool uses_var(const std::string& name) const { return degree_in(name) > 0; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& k) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned k) const;

  // Simultaneous substitution of variables by polynomials.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
  MultiPoly derivative(const std::string& name) const;

  Cpx eval_complex(const std::map<std::string, Cpx>& vals) const;
  Rat eval_rat(const std::map<std::string, Rat>& vals) const;
  QuadVal eval_quad(const std::map<std::string, QuadVal>& vals, const QuadCtx& ctx) const;

  // Rational content (gcd of coefficients, positive); zero poly has content 0.
  Rat content() const;
  MultiPoly primitive_part() const;

  // Dense coefficient list in one variable; entry k is the coefficient of
  // name^k as a polynomial in the remaining variables.
  std::vector<MultiPoly> coeffs_in(const std::string& name) const;
  // Univariate access: requires the polynomial to use at most one variable.
  std::vector<Rat> uni_coeffs() const;
  static MultiPoly from_uni_coeffs(const std::string& name, const std::vector<Rat>& coeffs);

  std::string to_string() const;

  // internal: construct over a given variable list
  MultiPoly(std::shared_ptr<const std::vector<std::string>> vars, TermMap terms);
  static std::shared_ptr<const std::vector<std::string>> intern_vars(std::vector<std::string> names);

 private:
  struct RawTag {};
  // keeps the variable list as given; only zero coefficients are dropped
  MultiPoly(std::shared_ptr<const std::vector<std::string>> vars, TermMap terms, RawTag);

  std::shared_ptr<const std::vector<std::string>> vars_;
  TermMap terms_;

  void trim();  // drop zero coefficients and unused variables
  friend MultiPoly align(const MultiPoly&, const std::shared_ptr<const std::vector<std::string>>&);
};

MultiPoly operator*(const Rat& k, const MultiPoly& p);

// Merge two polynomials onto a common variable list.
std::pair<MultiPoly, MultiPoly> merge_vars(const MultiPoly& a, const MultiPoly& b);

// Exact multivariate division: returns p / q, throws InternalError if q does
// not divide p exactly.
MultiPoly divexact(const MultiPoly& p, const MultiPoly& q);

// Univariate helpers (operate on the dense Rat coefficient form).
std::vector<Rat> uni_trim(std::vector<Rat> c);
std::vector<Rat> uni_mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
// division with remainder: returns {quotient, remainder}
std::pair<std::vector<Rat>, std::vector<Rat>> uni_divmod(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b);  // monic gcd
std::vector<Rat> uni_derivative(const std::vector<Rat>& a);

}  // namespace ghost
