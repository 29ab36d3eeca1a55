#pragma once

#include <algorithm>
#include <cmath>

#include "ghost/common.hpp"

namespace ghost {

struct Mat2 {
  Cpx a{0.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{0.0, 0.0};

  static Mat2 identity() { return {Cpx(1, 0), Cpx(0, 0), Cpx(0, 0), Cpx(1, 0)}; }

  Cpx trace() const { return a + d; }
  Cpx det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  // inverse by adjugate; valid for det == 1
  Mat2 inv_det1() const { return {d, -b, -c, a}; }

  double dist(const Mat2& o) const {
    return std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(c - o.c), std::abs(d - o.d)});
  }
  double dist_identity() const { return dist(identity()); }
};

}  // namespace ghost
