#include "ghost/roots.hpp"

#include <algorithm>
#include <cmath>

#include "ghost/newton.hpp"

namespace ghost {

namespace {

double scaled_residual(const std::vector<Cpx>& c, Cpx z) {
  Cpx p(0.0, 0.0);
  double scale = 0.0;
  double zp = 1.0;
  Cpx zk(1.0, 0.0);
  for (size_t k = 0; k < c.size(); ++k) {
    p += c[k] * zk;
    scale += std::abs(c[k]) * zp;
    zk *= z;
    zp *= std::abs(z);
  }
  return std::abs(p) / std::max(scale, 1e-300);
}

}  // namespace

std::vector<Cpx> aberth_roots(const std::vector<Cpx>& coeffs_in) {
  std::vector<Cpx> c = coeffs_in;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  size_t d = c.size() - 1;
  // strip roots at zero
  size_t zeros = 0;
  while (zeros < d && std::abs(c[zeros]) == 0.0) ++zeros;
  std::vector<Cpx> out(zeros, Cpx(0.0, 0.0));
  if (zeros) c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  d = c.size() - 1;
  if (d == 0) return out;

  // Cauchy-style radius
  double r = 0.0;
  for (size_t k = 0; k + 1 < c.size(); ++k) r = std::max(r, std::abs(c[k] / c.back()));
  r = 1.0 + r;

  std::vector<Cpx> z(d);
  const double pi = 3.14159265358979323846;
  for (size_t i = 0; i < d; ++i) {
    double ang = 2.0 * pi * (static_cast<double>(i) + 0.354) / static_cast<double>(d) + 0.5;
    z[i] = 0.7 * r * Cpx(std::cos(ang), std::sin(ang));
  }

  auto eval = [&](Cpx x, Cpx& p, Cpx& dp) {
    p = Cpx(0.0, 0.0);
    dp = Cpx(0.0, 0.0);
    for (size_t k = c.size(); k-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
  };

  for (int iter = 0; iter < 400; ++iter) {
    double moved = 0.0;
    for (size_t i = 0; i < d; ++i) {
      Cpx p, dp;
      eval(z[i], p, dp);
      if (std::abs(p) == 0.0) continue;
      Cpx ratio = (std::abs(dp) == 0.0) ? Cpx(1e-12, 0.0) : p / dp;
      Cpx sum(0.0, 0.0);
      for (size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        Cpx diff = z[i] - z[j];
        if (std::abs(diff) < 1e-14) diff = Cpx(1e-14, 1e-14);
        sum += 1.0 / diff;
      }
      Cpx denom = 1.0 - ratio * sum;
      Cpx step = (std::abs(denom) < 1e-14) ? ratio : ratio / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (moved < 1e-15) break;
  }
  // Newton polish
  for (size_t i = 0; i < d; ++i) {
    for (int k = 0; k < 4; ++k) {
      Cpx p, dp;
      eval(z[i], p, dp);
      if (std::abs(dp) == 0.0) break;
      z[i] -= p / dp;
    }
  }
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

std::vector<std::pair<std::vector<Rat>, unsigned>> squarefree_decompose(const std::vector<Rat>& coeffs) {
  std::vector<Rat> f = uni_trim(coeffs);
  if (f.size() <= 1) return {};
  // make monic
  Rat lead = f.back();
  for (auto& c : f) c /= lead;
  std::vector<std::pair<std::vector<Rat>, unsigned>> out;
  // Yun
  std::vector<Rat> fp = uni_derivative(f);
  std::vector<Rat> a = uni_gcd(f, fp);
  std::vector<Rat> b = uni_divmod(f, a).first;
  std::vector<Rat> c = uni_divmod(fp, a).first;
  std::vector<Rat> d(c.size());
  {
    std::vector<Rat> bp = uni_derivative(b);
    d = c;
    // d = c - b'
    d.resize(std::max(c.size(), bp.size()), Rat(0));
    for (size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    d = uni_trim(std::move(d));
  }
  unsigned mult = 1;
  while (b.size() > 1) {
    std::vector<Rat> g = uni_gcd(b, d);
    if (g.size() > 1) out.emplace_back(g, mult);
    b = uni_divmod(b, g).first;
    std::vector<Rat> cq = uni_divmod(d, g).first;
    std::vector<Rat> bp = uni_derivative(b);
    d = cq;
    d.resize(std::max(cq.size(), bp.size()), Rat(0));
    for (size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    d = uni_trim(std::move(d));
    ++mult;
  }
  return out;
}

ComplexRootSet uni_roots(const std::vector<Rat>& coeffs) {
  std::vector<Rat> f = uni_trim(coeffs);
  if (f.size() <= 1) throw InternalError("uni_roots: degree must be >= 1");
  ComplexRootSet out;
  auto parts = squarefree_decompose(f);
  for (const auto& [g, mult] : parts) {
    std::vector<Cpx> cc;
    cc.reserve(g.size());
    for (const auto& q : g) cc.emplace_back(to_double(q), 0.0);
    auto roots = aberth_roots(cc);
    for (Cpx r : roots) {
      double res = scaled_residual(cc, r);
      out.residual_bound = std::max(out.residual_bound, res);
      out.roots.emplace_back(r, mult);
    }
  }
  if (out.residual_bound > kRootResidual)
    throw ResourceCapError("uni_roots: residual bound " + std::to_string(out.residual_bound) +
                           " exceeds tolerance");
  // deterministic presentation
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

ComplexRootSet uni_roots(const MultiPoly& p) {
  if (p.vars().size() > 1) throw InternalError("uni_roots: polynomial is multivariate");
  return uni_roots(p.uni_coeffs());
}

SmallFactors factor_into_small(const std::vector<Rat>& squarefree) {
  SmallFactors out;
  std::vector<Rat> f = uni_trim(squarefree);
  if (f.size() <= 1) {
    out.leftover = f;
    return out;
  }
  Rat lead = f.back();
  for (auto& c : f) c /= lead;

  // exact rational roots, via numeric candidates + exact verification
  bool progress = true;
  while (progress && f.size() > 1) {
    progress = false;
    std::vector<Cpx> cc;
    for (const auto& q : f) cc.emplace_back(to_double(q), 0.0);
    for (Cpx r : aberth_roots(cc)) {
      if (std::abs(r.imag()) > 1e-7) continue;
      auto cand = rationalize(r.real());
      if (!cand) continue;
      // exact check: f(cand) == 0
      Rat v(0);
      for (size_t k = f.size(); k-- > 0;) v = v * *cand + f[k];
      if (v != 0) continue;
      // deflate exactly by (z - cand)
      auto [q, rem] = uni_divmod(f, {-*cand, Rat(1)});
      if (!rem.empty()) continue;
      out.linear_roots.push_back(*cand);
      f = q;
      progress = true;
      break;
    }
  }

  // conjugate pairs -> exact quadratics z^2 - s z - t
  progress = true;
  while (progress && f.size() > 2) {
    progress = false;
    std::vector<Cpx> cc;
    for (const auto& q : f) cc.emplace_back(to_double(q), 0.0);
    auto roots = aberth_roots(cc);
    for (size_t i = 0; i < roots.size() && !progress; ++i) {
      for (size_t j = i + 1; j < roots.size() && !progress; ++j) {
        Cpx sum = roots[i] + roots[j];
        Cpx prod = roots[i] * roots[j];
        if (std::abs(sum.imag()) > 1e-6 || std::abs(prod.imag()) > 1e-6) continue;
        auto rs = rationalize(sum.real(), 1e-6);
        auto rp = rationalize(prod.real(), 1e-6);
        if (!rs || !rp) continue;
        // candidate monic factor z^2 - sum*z + prod; verify by exact division
        std::vector<Rat> quad = {*rp, -*rs, Rat(1)};
        auto [q, rem] = uni_divmod(f, quad);
        if (!rem.empty()) continue;
        // stored as z^2 = s z + t
        out.quads.emplace_back(*rs, -*rp);
        f = q;
        progress = true;
      }
    }
  }
  if (f.size() == 2) {
    // monic linear: root = -f[0]
    out.linear_roots.push_back(-f[0]);
    f = {Rat(1)};
  } else if (f.size() == 3) {
    out.quads.emplace_back(-f[1], -f[0]);
    f = {Rat(1)};
  }
  if (f.size() > 1) out.leftover = f;
  return out;
}

// ---------------------------------------------------------------------------
// small dense complex solvers for polishing and falsification searches

std::vector<Cpx> cpx_least_squares(const std::vector<std::vector<Cpx>>& A, const std::vector<Cpx>& b) {
  size_t j = A.size();
  if (j == 0) return {};
  size_t k = A[0].size();
  // normal equations M x = rhs with M = A^H A
  std::vector<std::vector<Cpx>> M(k, std::vector<Cpx>(k, Cpx(0, 0)));
  std::vector<Cpx> rhs(k, Cpx(0, 0));
  for (size_t r = 0; r < j; ++r) {
    for (size_t c1 = 0; c1 < k; ++c1) {
      Cpx conj = std::conj(A[r][c1]);
      for (size_t c2 = 0; c2 < k; ++c2) M[c1][c2] += conj * A[r][c2];
      rhs[c1] += conj * b[r];
    }
  }
  // Gaussian elimination with partial pivoting
  std::vector<size_t> perm(k);
  for (size_t i = 0; i < k; ++i) perm[i] = i;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < k; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (std::abs(M[piv][col]) < 1e-250) return {};
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = col + 1; r < k; ++r) {
      Cpx f = M[r][col] / M[col][col];
      for (size_t c = col; c < k; ++c) M[r][c] -= f * M[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Cpx> x(k);
  for (size_t col = k; col-- > 0;) {
    Cpx acc = rhs[col];
    for (size_t c = col + 1; c < k; ++c) acc -= M[col][c] * x[c];
    x[col] = acc / M[col][col];
  }
  return x;
}

double system_residual(const std::vector<MultiPoly>& polys, const std::vector<std::string>& vars,
                       const std::vector<Cpx>& point) {
  std::map<std::string, Cpx> vals;
  for (size_t i = 0; i < vars.size(); ++i) vals[vars[i]] = point[i];
  double worst = 0.0;
  for (const auto& p : polys) worst = std::max(worst, std::abs(p.eval_complex(vals)));
  return worst;
}

std::vector<Cpx> newton_refine(const std::vector<MultiPoly>& polys,
                               const std::vector<std::string>& vars, std::vector<Cpx> start,
                               int max_iter) {
  const size_t k = vars.size();
  std::vector<std::vector<MultiPoly>> jac(polys.size(), std::vector<MultiPoly>(k));
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t v = 0; v < k; ++v) jac[i][v] = polys[i].derivative(vars[v]);

  double best = system_residual(polys, vars, start);
  std::vector<Cpx> x = start;
  for (int it = 0; it < max_iter; ++it) {
    std::map<std::string, Cpx> vals;
    for (size_t i = 0; i < k; ++i) vals[vars[i]] = x[i];
    std::vector<std::vector<Cpx>> A(polys.size(), std::vector<Cpx>(k));
    std::vector<Cpx> b(polys.size());
    for (size_t i = 0; i < polys.size(); ++i) {
      b[i] = -polys[i].eval_complex(vals);
      for (size_t v = 0; v < k; ++v) A[i][v] = jac[i][v].eval_complex(vals);
    }
    auto step = cpx_least_squares(A, b);
    if (step.empty()) break;
    double norm = 0.0;
    for (size_t i = 0; i < k; ++i) {
      x[i] += step[i];
      norm = std::max(norm, std::abs(step[i]));
    }
    double res = system_residual(polys, vars, x);
    if (res < best) {
      best = res;
      start = x;
    }
    if (norm < 1e-15 || best < 1e-16) break;
  }
  return start;
}

}  // namespace ghost

