#pragma once

#include <vector>

#include "ghost/poly.hpp"

namespace ghost {

struct ComplexRootSet {
  std::vector<std::pair<Cpx, unsigned>> roots;  // (root, multiplicity)
  double residual_bound = 0.0;

  unsigned total_multiplicity() const {
    unsigned s = 0;
    for (const auto& [r, m] : roots) s += m;
    return s;
  }
};

// All complex roots with multiplicity of an exact univariate polynomial.
// Square-free decomposition is done exactly (Yun), the square-free parts are
// solved by Aberth-Ehrlich iteration with a scaled-residual certificate.
// Throws InternalError for degree < 1, ResourceCapError on nonconvergence.
ComplexRootSet uni_roots(const MultiPoly& p);
ComplexRootSet uni_roots(const std::vector<Rat>& coeffs);

// Roots of a complex-coefficient polynomial (no multiplicity bookkeeping).
std::vector<Cpx> aberth_roots(const std::vector<Cpx>& coeffs);

// Yun's square-free decomposition: returns [(factor, multiplicity)] with
// factors monic and pairwise coprime.
std::vector<std::pair<std::vector<Rat>, unsigned>> squarefree_decompose(const std::vector<Rat>& coeffs);

// Factor a square-free rational polynomial into exact degree<=2 pieces where
// possible: rational roots are deflated exactly, remaining numeric roots are
// paired into conjugate quadratics whose rational coefficients are verified
// by exact division. `leftover` receives the unfactored remainder (empty when
// the polynomial splits completely into degree<=2 factors).
struct SmallFactors {
  std::vector<Rat> linear_roots;            // exact rational roots
  std::vector<std::pair<Rat, Rat>> quads;   // z^2 = s z + t  (i.e. z^2 - s z - t factor)
  std::vector<Rat> leftover;                // residual cofactor, monic
};
SmallFactors factor_into_small(const std::vector<Rat>& squarefree);

}  // namespace ghost
