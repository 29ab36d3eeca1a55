#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghost/poly.hpp"

namespace ghost {

// Solve the (overdetermined) complex least-squares system A x ~= b through
// the normal equations; A is row-major j x k, j >= k. Returns empty on a
// singular system.
std::vector<Cpx> cpx_least_squares(const std::vector<std::vector<Cpx>>& A, const std::vector<Cpx>& b);

// Gauss-Newton refinement of a candidate root of a polynomial system.
std::vector<Cpx> newton_refine(const std::vector<MultiPoly>& polys,
                               const std::vector<std::string>& vars, std::vector<Cpx> start,
                               int max_iter = 30);

// max |p_i(point)| over the system
double system_residual(const std::vector<MultiPoly>& polys, const std::vector<std::string>& vars,
                       const std::vector<Cpx>& point);

}  // namespace ghost
