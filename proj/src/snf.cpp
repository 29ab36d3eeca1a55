#include "ghost/snf.hpp"

#include <algorithm>

namespace ghost {

namespace {

bool find_pivot(const IntMatrix& m, size_t start, size_t& pr, size_t& pc) {
  bool found = false;
  Int best;
  for (size_t r = start; r < m.rows; ++r) {
    for (size_t c = start; c < m.cols; ++c) {
      const Int& v = m.at(r, c);
      if (v == 0) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  size_t k = std::min(m.rows, m.cols);
  std::vector<Int> diag;

  for (size_t t = 0; t < k; ++t) {
    size_t pr = t, pc = t;
    if (!find_pivot(m, t, pr, pc)) break;
    // move pivot to (t,t)
    if (pr != t)
      for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(t, c));
    if (pc != t)
      for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, pc), m.at(r, t));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        Int q = m.at(r, t) / m.at(t, t);
        for (size_t c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          // remainder smaller than pivot: swap rows and restart
          for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(r, c), m.at(t, c));
          clean = false;
        }
      }
      for (size_t c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        Int q = m.at(t, c) / m.at(t, t);
        for (size_t r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, c), m.at(r, t));
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility fix-up: pivot must divide every remaining entry
      for (size_t r = t + 1; r < m.rows && clean; ++r) {
        for (size_t c = t + 1; c < m.cols && clean; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (size_t cc = 0; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
            clean = false;
          }
        }
      }
    }
    Int d = abs(m.at(t, t));
    diag.push_back(d);
  }
  while (diag.size() < k) diag.push_back(Int(0));
  return diag;
}

}  // namespace ghost
