#include "ghost/slice.hpp"

#include <algorithm>

namespace ghost {

namespace {

Cpx coord(const F2Point& pt, int p, int q) { return pt.value(PairSym(p, q)); }

QuadVal coord_exact(const F2Point& pt, int p, int q) {
  PairSym s(p, q);
  if (s.diagonal()) return QuadVal(Rat(2));
  return pt.seed_exact->at(s);
}

// direct expansion determinants; sizes are fixed at 3 and 4
template <typename T, typename Mul, typename Sub, typename Add>
T det3(const std::array<std::array<T, 3>, 3>& m, Mul mul, Sub sub, Add add) {
  T a = mul(m[0][0], sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1])));
  T b = mul(m[0][1], sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0])));
  T c = mul(m[0][2], sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0])));
  return add(sub(a, b), c);
}

template <typename T, typename Mul, typename Sub, typename Add>
T det4(const std::array<std::array<T, 4>, 4>& m, Mul mul, Sub sub, Add add) {
  T acc{};
  bool first = true;
  int sign = 1;
  for (int col = 0; col < 4; ++col) {
    std::array<std::array<T, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == col) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    T term = mul(m[0][col], det3<T>(minor, mul, sub, add));
    if (first) {
      acc = sign > 0 ? term : sub(T{}, term);
      first = false;
    } else {
      acc = sign > 0 ? add(acc, term) : sub(acc, term);
    }
    sign = -sign;
  }
  return acc;
}

int seed_range_max(const F2Point& pt) {
  int mmax = 0;
  for (const auto& [s, v] : pt.seed) mmax = std::max(mmax, s.q);
  return mmax;
}

}  // namespace

RectangleResidual rectangle_residual(const F2Point& pt, int a, int b) {
  if (!(3 <= a && a < b)) throw InternalError("rectangle_residual: need 3 <= a < b");
  RectangleResidual out;
  out.indices = {1, 2, a, b};

  auto cmul = [](Cpx x, Cpx y) { return x * y; };
  auto csub = [](Cpx x, Cpx y) { return x - y; };
  auto cadd = [](Cpx x, Cpx y) { return x + y; };
  std::array<std::array<Cpx, 4>, 4> m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m[r][c] = (r == c) ? Cpx(2.0, 0.0) : coord(pt, out.indices[r], out.indices[c]);
  out.value = det4<Cpx>(m, cmul, csub, cadd);

  if (pt.seed_exact && b <= seed_range_max(pt)) {
    QuadCtx ctx = pt.ext ? *pt.ext : QuadCtx{Rat(0), Rat(0), Cpx(0, 0)};
    auto qm = [&](const QuadVal& x, const QuadVal& y) { return qmul(x, y, ctx); };
    auto qs = [](const QuadVal& x, const QuadVal& y) { return qsub(x, y); };
    auto qa = [](const QuadVal& x, const QuadVal& y) { return qadd(x, y); };
    std::array<std::array<QuadVal, 4>, 4> qm4;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        qm4[r][c] = (r == c) ? QuadVal(Rat(2)) : coord_exact(pt, out.indices[r], out.indices[c]);
    out.exact = det4<QuadVal>(qm4, qm, qs, qa);
  }
  return out;
}

HexagonWitness hexagon_lift(const F2Point& pt, std::vector<int> indices, size_t max_size,
                            double tol) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.size() > max_size)
    throw InternalError("hexagon_lift: index set larger than max_size");

  HexagonWitness out;
  out.index_set = indices;
  if (indices.size() < 3) {
    out.consistent = true;
    return out;
  }

  std::vector<std::array<int, 3>> triples;
  const size_t n = indices.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t l = j + 1; l < n; ++l) triples.push_back({indices[i], indices[j], indices[l]});

  auto half_det = [&](const std::array<int, 3>& S, const std::array<int, 3>& T) {
    auto cmul = [](Cpx x, Cpx y) { return x * y; };
    auto csub = [](Cpx x, Cpx y) { return x - y; };
    auto cadd = [](Cpx x, Cpx y) { return x + y; };
    std::array<std::array<Cpx, 3>, 3> m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = coord(pt, S[r], T[c]);
    return det3<Cpx>(m, cmul, csub, cadd) * 0.5;
  };

  const size_t k = triples.size();
  std::vector<std::vector<Cpx>> H(k, std::vector<Cpx>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) H[i][j] = H[j][i] = half_det(triples[i], triples[j]);

  // true squares at desk scale are either 0 or well away from it
  const double zero_tol = 1e-12;
  std::vector<Cpx> base(k);
  std::vector<bool> zero(k, false);
  for (size_t i = 0; i < k; ++i) {
    if (std::abs(H[i][i]) < zero_tol) {
      zero[i] = true;
      base[i] = Cpx(0.0, 0.0);
    } else {
      base[i] = std::sqrt(H[i][i]);
    }
  }
  std::vector<size_t> free_idx;
  for (size_t i = 0; i < k; ++i)
    if (!zero[i]) free_idx.push_back(i);
  // a global sign flip leaves every product unchanged: pin the first
  size_t search = free_idx.empty() ? 0 : free_idx.size() - 1;
  if (search > 20) throw InternalError("hexagon_lift: sign search too large");

  std::vector<Cpx> vals(k);
  for (size_t mask = 0; mask < (1ull << search); ++mask) {
    for (size_t i = 0; i < k; ++i) vals[i] = base[i];
    for (size_t bit = 0; bit < search; ++bit)
      if (mask & (1ull << bit)) vals[free_idx[bit + 1]] = -vals[free_idx[bit + 1]];
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i)
      for (size_t j = i; j < k && ok; ++j)
        if (std::abs(vals[i] * vals[j] - H[i][j]) > tol) ok = false;
    if (ok) {
      out.consistent = true;
      for (size_t i = 0; i < k; ++i) out.triple_values[triples[i]] = vals[i];
      return out;
    }
  }
  out.consistent = false;
  return out;
}

GhostReport classify_ghost(const F2Point& pt, int m, int n, RectangleScope scope, double tol) {
  GhostReport rep;
  int hi = (scope == RectangleScope::SeedRange) ? m : n;
  for (int a = 3; a <= hi && !rep.failed_rectangle; ++a) {
    for (int b = a + 1; b <= hi; ++b) {
      RectangleResidual r = rectangle_residual(pt, a, b);
      if (!r.satisfied(tol)) {
        rep.failed_rectangle = r;
        break;
      }
    }
  }
  std::vector<int> idx;
  for (int i = 1; i <= std::min(hi, 6); ++i) idx.push_back(i);
  rep.hexagon = hexagon_lift(pt, idx, 6, tol);
  rep.is_ghost = rep.failed_rectangle.has_value() || !rep.hexagon->consistent;
  return rep;
}

}  // namespace ghost
