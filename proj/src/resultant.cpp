#include "ghost/resultant.hpp"

namespace ghost {

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) throw InternalError("resultant: zero polynomial input");
  unsigned dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp == 0 || dq == 0) throw InternalError("resultant: both inputs must use " + var);

  auto pc = p.coeffs_in(var);
  auto qc = q.coeffs_in(var);
  size_t n = dp + dq;
  // Sylvester matrix, rows of q-shifts then p-shifts (any fixed layout works
  // up to sign)
  std::vector<std::vector<MultiPoly>> M(n, std::vector<MultiPoly>(n));
  for (size_t r = 0; r < dq; ++r)
    for (size_t k = 0; k <= dp; ++k) M[r][r + (dp - k)] = pc[k];
  for (size_t r = 0; r < dp; ++r)
    for (size_t k = 0; k <= dq; ++k) M[dq + r][r + (dq - k)] = qc[k];

  // Bareiss fraction-free elimination with exact polynomial division
  MultiPoly prev = MultiPoly::constant(Rat(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && M[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly();  // singular: resultant 0
      std::swap(M[k], M[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = num.is_zero() ? MultiPoly() : divexact(num, prev);
      }
      M[i][k] = MultiPoly();
    }
    prev = M[k][k];
  }
  MultiPoly det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace ghost
