#pragma once

#include <array>
#include <optional>

#include "ghost/f2.hpp"

namespace ghost {

struct RectangleResidual {
  std::array<int, 4> indices{};  // {1, 2, a, b}
  Cpx value{0.0, 0.0};
  std::optional<QuadVal> exact;  // set when the point has exact coordinates

  bool satisfied(double tol = kRelationTol) const {
    if (exact) return exact->is_zero();
    return std::abs(value) <= tol;
  }
};

// 4x4 determinant with diagonal 2 and entries x_{pq} over rows {1,2,a,b}.
RectangleResidual rectangle_residual(const F2Point& pt, int a, int b);

struct HexagonWitness {
  std::vector<int> index_set;
  bool consistent = false;
  std::map<std::array<int, 3>, Cpx> triple_values;  // a satisfying assignment, when consistent
};

// Attempt to assign all triple symbols over the index set: squares come from
// the S == T relations, signs from exhaustive search (one global flip is
// factored out), mixed relations checked numerically.
HexagonWitness hexagon_lift(const F2Point& pt, std::vector<int> indices, size_t max_size = 6,
                            double tol = kRelationTol);

enum class RectangleScope { SeedRange, FullRange };

struct GhostReport {
  bool is_ghost = false;
  std::optional<RectangleResidual> failed_rectangle;
  std::optional<HexagonWitness> hexagon;
};

// Evaluates the rectangle family and the hexagon lift over the chosen index
// range ({1..m} by default; the full arc range requires lifted coordinates).
GhostReport classify_ghost(const F2Point& pt, int m, int n,
                           RectangleScope scope = RectangleScope::SeedRange,
                           double tol = kRelationTol);

}  // namespace ghost
