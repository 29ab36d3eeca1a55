#pragma once

#include "ghost/poly.hpp"

namespace ghost {

// Sylvester resultant of p and q with respect to var, computed by
// fraction-free (Bareiss) elimination on the Sylvester matrix.
// Requires both polynomials to have positive degree in var; throws
// InternalError on zero input, ParseError-free.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

}  // namespace ghost
