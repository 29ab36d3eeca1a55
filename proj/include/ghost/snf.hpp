#pragma once

#include <vector>

#include "ghost/common.hpp"

namespace ghost {

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  Int& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Int& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// Invariant factors d1 | d2 | ... of the Smith normal form, length
// min(rows, cols), nonnegative, including ones and trailing zeros.
std::vector<Int> smith_normal_form(IntMatrix m);

}  // namespace ghost
