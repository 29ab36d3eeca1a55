#include "ghost/repvar.hpp"

#include <algorithm>

#include "ghost/newton.hpp"

namespace ghost {

namespace {

MultiPoly qconst(const QuadVal& v) {
  MultiPoly p = MultiPoly::constant(v.u);
  if (v.v != 0) p += MultiPoly::var("r") * v.v;
  return p;
}

bool is_pm2(const QuadVal& v) { return v.v == 0 && (v.u == 2 || v.u == -2); }

}  // namespace

PolyMat2 PolyMat2::identity() {
  return {MultiPoly::constant(Rat(1)), MultiPoly(), MultiPoly(), MultiPoly::constant(Rat(1))};
}

PolyMat2 PolyMat2::operator*(const PolyMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

PolyMat2 PolyMat2::adjugate() const { return {d, -b, -c, a}; }

std::vector<MultiPoly> TraceSystem::case_generators(size_t idx) const {
  std::vector<MultiPoly> gens = base;
  const auto& extra = cases.at(idx).extra;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return gens;
}

TraceSystem build_trace_system(const F2Point& pt, int m, const GroupPresentation* cover) {
  if (!pt.seed_exact)
    throw InternalError("build_trace_system: point has no exact seed coordinates");
  const auto& seed = *pt.seed_exact;

  TraceSystem ts;
  ts.m = m;
  bool needs_ext = false;
  for (const auto& [s, v] : seed)
    if (v.v != 0) needs_ext = true;
  if (needs_ext) {
    if (!pt.ext) throw InternalError("build_trace_system: quadratic coordinates without field");
    ts.ext = pt.ext;
  }
  auto target = [&](int p, int q) { return seed.at(PairSym(p, q)); };

  // normalization: first generator whose target trace avoids +-2
  for (int p = 2; p <= m && !ts.normalized; ++p)
    if (!is_pm2(target(1, p))) ts.normalized = p;

  ts.gen_matrix.assign(static_cast<size_t>(m + 1), PolyMat2{});
  for (int p = 2; p <= m; ++p) {
    if (p == ts.normalized) {
      MultiPoly a = MultiPoly::var("a");
      ts.gen_matrix[p] = {a, MultiPoly(), MultiPoly(), qconst(target(1, p)) - a};
      ts.variables.push_back("a");
    } else {
      std::string sp = std::to_string(p);
      ts.gen_matrix[p] = {MultiPoly::var("b" + sp), MultiPoly::var("c" + sp),
                          MultiPoly::var("d" + sp), qconst(target(1, p)) - MultiPoly::var("b" + sp)};
      ts.variables.push_back("b" + sp);
      ts.variables.push_back("c" + sp);
      ts.variables.push_back("d" + sp);
    }
  }

  // determinants (the trace constraints are built into the bottom-right entries)
  for (int p = 2; p <= m; ++p) {
    const PolyMat2& X = ts.gen_matrix[p];
    ts.base.push_back(X.a * X.d - X.b * X.c - MultiPoly::constant(Rat(1)));
  }
  // pairwise traces: tr(X_p^{-1} X_q) with the adjugate as the inverse
  for (int p = 2; p <= m; ++p)
    for (int q = p + 1; q <= m; ++q) {
      const PolyMat2 &X = ts.gen_matrix[p], &Y = ts.gen_matrix[q];
      ts.base.push_back(X.d * Y.a + X.a * Y.d - X.b * Y.c - X.c * Y.b - qconst(target(p, q)));
    }
  if (ts.ext) {
    MultiPoly r = MultiPoly::var("r");
    ts.base.push_back(r * r - r * ts.ext->s - MultiPoly::constant(ts.ext->t));
    ts.variables.push_back("r");
  }
  if (cover) ts.relators = cover->relators;

  // covering case split per generator with target trace +-2:
  //   X = eps*I;  c != 0;  c = 0, d != 0   (c = d = 0 forces X = eps*I via det)
  struct GenCases {
    int p;
    std::vector<TraceSystem::Case> opts;
  };
  std::vector<GenCases> split;
  for (int p = 2; p <= m; ++p) {
    if (p == ts.normalized) continue;
    QuadVal t = target(1, p);
    if (!is_pm2(t)) continue;
    Rat eps = t.u / 2;
    std::string sp = std::to_string(p);
    std::string sign = eps > 0 ? "I" : "-I";
    GenCases gc{p, {}};
    gc.opts.push_back({"X" + sp + "=" + sign,
                       {MultiPoly::var("b" + sp) - MultiPoly::constant(eps), MultiPoly::var("c" + sp),
                        MultiPoly::var("d" + sp)},
                       {}});
    gc.opts.push_back({"X" + sp + " parabolic c!=0",
                       {MultiPoly::var("ic" + sp) * MultiPoly::var("c" + sp) - MultiPoly::constant(Rat(1))},
                       {"ic" + sp}});
    gc.opts.push_back({"X" + sp + " parabolic c=0 d!=0",
                       {MultiPoly::var("c" + sp),
                        MultiPoly::var("id" + sp) * MultiPoly::var("d" + sp) - MultiPoly::constant(Rat(1))},
                       {"id" + sp}});
    split.push_back(std::move(gc));
  }

  if (split.empty()) {
    ts.cases.push_back({"full", {}, {}});
  } else {
    std::vector<size_t> idx(split.size(), 0);
    while (true) {
      TraceSystem::Case combo;
      for (size_t i = 0; i < split.size(); ++i) {
        const auto& opt = split[i].opts[idx[i]];
        if (!combo.label.empty()) combo.label += " & ";
        combo.label += opt.label;
        combo.extra.insert(combo.extra.end(), opt.extra.begin(), opt.extra.end());
        combo.extra_vars.insert(combo.extra_vars.end(), opt.extra_vars.begin(), opt.extra_vars.end());
      }
      ts.cases.push_back(std::move(combo));
      size_t i = split.size();
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < split[i].opts.size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  return ts;
}

namespace {

PolyMat2 nf_mat(const PolyMat2& M, const GroebnerBasis& gb) {
  return {normal_form(M.a, gb), normal_form(M.b, gb), normal_form(M.c, gb), normal_form(M.d, gb)};
}

// relator image as a polynomial matrix, entries reduced step by step; letter
// g indexes the cover generator x_{g+1}
PolyMat2 relator_image(const TraceSystem& ts, const GroupWord& w, const GroebnerBasis& gb) {
  PolyMat2 acc = PolyMat2::identity();
  for (const auto& [g, e] : w.letters) {
    const PolyMat2& X = ts.gen_matrix.at(static_cast<size_t>(g + 1));
    acc = nf_mat(acc * (e > 0 ? X : X.adjugate()), gb);
  }
  return acc;
}

}  // namespace

EmptinessCertificate emptiness_check(const TraceSystem& ts, const BuchbergerCaps& caps) {
  EmptinessCertificate cert;
  for (size_t i = 0; i < ts.cases.size(); ++i) {
    std::vector<std::string> prio = ts.variables;
    for (const auto& v : ts.cases[i].extra_vars) prio.insert(prio.begin(), v);
    MonomialOrder order = MonomialOrder::grevlex(prio);
    try {
      GroebnerBasis gb = buchberger(Ideal(ts.case_generators(i)), order, caps);
      bool one = ideal_contains_one(gb);
      bool used_relators = false;
      if (!one && !ts.relators.empty()) {
        // the pairwise traces are satisfiable here; a preimage point must
        // also send every relator to the identity
        used_relators = true;
        std::vector<MultiPoly> gens = gb.basis;
        for (const auto& w : ts.relators) {
          PolyMat2 img = relator_image(ts, w, gb);
          for (MultiPoly p : {img.a - MultiPoly::constant(Rat(1)), img.b, img.c,
                              img.d - MultiPoly::constant(Rat(1))}) {
            MultiPoly n = normal_form(p, gb);
            if (!n.is_zero()) gens.push_back(std::move(n));
          }
        }
        if (gens.size() > gb.basis.size()) {
          gb = buchberger(Ideal(gens), order, caps);
          one = ideal_contains_one(gb);
        }
      }
      cert.cases.push_back({ts.cases[i].label, std::move(gb), one, used_relators});
      if (!one) {
        cert.empty = false;
        cert.conclusive = true;
        cert.note = "case '" + ts.cases[i].label + "' has solutions";
        return cert;
      }
    } catch (const ResourceCapError& e) {
      cert.conclusive = false;
      cert.empty = false;
      cert.note = std::string("resource cap in case '") + ts.cases[i].label + "': " + e.what();
      return cert;
    }
  }
  cert.empty = true;
  cert.conclusive = true;
  return cert;
}

std::vector<std::pair<MultiPoly, MultiPoly>> derivation_trace(const TraceSystem& ts,
                                                              const BuchbergerCaps& caps) {
  if (ts.m != 5 || ts.normalized != 2)
    throw InternalError("derivation_trace: expects the 5-generator system normalized on X2");
  GroebnerBasis gb = buchberger(Ideal(ts.case_generators(0)), MonomialOrder::grevlex(ts.variables), caps);
  const char* staged[] = {
      "c3*d4 + d3*c4 + 1/3", "c3*d5 + d3*c5 + 1/3", "c4*d5 + d4*c5 + 1/3",
      "c3*d3 + 2/3",         "c4*d4 + 2/3",         "c5*d5 + 2/3",
      "2*c4^2 - c3*c4 + 2*c3^2", "c3^2"};
  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (const char* s : staged) {
    MultiPoly p = MultiPoly::parse(s);
    out.emplace_back(p, normal_form(p, gb));
  }
  return out;
}

RepWitness verify_witness(const std::vector<Mat2>& matrices, const GroupPresentation& cover,
                          const F2Point& pt, double tol) {
  RepWitness w;
  w.matrices = matrices;
  const int m = static_cast<int>(matrices.size()) + 1;
  auto fail = [&](const std::string& why) {
    w.accepted = false;
    w.failure = why;
    return w;
  };

  for (int p = 2; p <= m; ++p) {
    double dr = std::abs(matrices[static_cast<size_t>(p - 2)].det() - Cpx(1.0, 0.0));
    w.det_residual = std::max(w.det_residual, dr);
    if (dr > 1e-10) return fail("det(X" + std::to_string(p) + ") differs from 1");
  }
  auto target = [&](int p, int q) { return pt.value(PairSym(p, q)); };
  for (int p = 2; p <= m; ++p) {
    double tr = std::abs(matrices[static_cast<size_t>(p - 2)].trace() - target(1, p));
    w.trace_residual = std::max(w.trace_residual, tr);
    if (tr > tol) return fail("tr(X" + std::to_string(p) + ") misses x1" + std::to_string(p));
  }
  for (int p = 2; p <= m; ++p) {
    for (int q = p + 1; q <= m; ++q) {
      Mat2 prod = matrices[static_cast<size_t>(p - 2)].inv_det1() * matrices[static_cast<size_t>(q - 2)];
      double tr = std::abs(prod.trace() - target(p, q));
      w.trace_residual = std::max(w.trace_residual, tr);
      if (tr > tol)
        return fail("tr(X" + std::to_string(p) + "^-1 X" + std::to_string(q) + ") misses x" +
                    std::to_string(p) + std::to_string(q));
    }
  }
  for (size_t i = 0; i < cover.relators.size(); ++i) {
    Mat2 img = evaluate_word(cover.relators[i], matrices);
    double dev = img.dist_identity();
    w.relator_residual = std::max(w.relator_residual, dev);
    if (dev > tol) return fail("relator " + std::to_string(i + 1) + " does not map to the identity");
  }
  w.accepted = true;
  return w;
}

std::vector<Mat2> stored_witness_t56_0m1() {
  const double s5 = std::sqrt(5.0);
  Mat2 x2{{0, 1}, {0, 0}, {0, 0}, {0, -1}};
  Mat2 x3{{-0.5, 0}, {-s5 / 4.0, -0.5}, {s5 / 3.0, -2.0 / 3.0}, {-0.5, 0}};
  Mat2 x4{{-0.5, -0.5}, {s5 / 4.0, -0.25}, {-s5 / 3.0, -1.0 / 3.0}, {-0.5, 0.5}};
  Mat2 x5{{0, -0.5}, {0, 0.75}, {0, 1.0}, {0, 0.5}};
  return {x2, x3, x4, x5};
}

PreimageReport preimage_report(const F2Point& pt, bool is_ghost, const KnotContext& ctx,
                               const BuchbergerCaps& caps) {
  PreimageReport rep;
  if (!is_ghost) {
    rep.verdict = PreimageReport::Verdict::InImage;
    rep.reason = "non-ghost point: the image contains every non-ghost character";
    return rep;
  }
  TraceSystem ts;
  try {
    ts = build_trace_system(pt, ctx.m, &ctx.cover);
  } catch (const InternalError& e) {
    rep.verdict = PreimageReport::Verdict::Inconclusive;
    rep.reason = e.what();
    return rep;
  }
  EmptinessCertificate cert = emptiness_check(ts, caps);
  if (!cert.conclusive) {
    rep.verdict = PreimageReport::Verdict::Inconclusive;
    rep.reason = cert.note;
    rep.certificate = std::move(cert);
    return rep;
  }
  if (cert.empty) {
    rep.verdict = PreimageReport::Verdict::Empty;
    rep.reason = "every case ideal reduces to {1}";
    rep.certificate = std::move(cert);
    return rep;
  }
  rep.certificate = std::move(cert);
  // trace and relator constraints are satisfiable; a verified representation
  // decides membership
  if (ctx.spec == "torus:5,6" && std::abs(pt.reduced.at(0) - Cpx(0, 0)) < 1e-8 &&
      std::abs(pt.reduced.at(1) - Cpx(-1, 0)) < 1e-8) {
    RepWitness w = verify_witness(stored_witness_t56_0m1(), ctx.cover, pt);
    if (w.accepted) {
      rep.verdict = PreimageReport::Verdict::InImage;
      rep.reason = "verified representation witness";
      rep.witness = std::move(w);
      return rep;
    }
    rep.verdict = PreimageReport::Verdict::Inconclusive;
    rep.reason = "stored witness rejected: " + w.failure;
    rep.witness = std::move(w);
    return rep;
  }
  // solve for a witness from the satisfiable system (deterministic seed)
  if (auto sol = numeric_preimage_search(ts, 300, 0x5eed5eedULL, 1e-10)) {
    RepWitness w = verify_witness(matrices_at(ts, *sol), ctx.cover, pt);
    if (w.accepted) {
      rep.verdict = PreimageReport::Verdict::InImage;
      rep.reason = "computed representation witness";
      rep.witness = std::move(w);
      return rep;
    }
  }
  rep.verdict = PreimageReport::Verdict::Inconclusive;
  rep.reason = "constraints admit solutions but no representation witness was verified";
  return rep;
}

std::optional<std::vector<Cpx>> numeric_solution_search(const std::vector<MultiPoly>& gens,
                                                        const std::vector<std::string>& vars,
                                                        int starts, std::uint64_t rng_seed,
                                                        double tol) {
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (int s = 0; s < starts; ++s) {
    std::vector<Cpx> x(vars.size());
    for (auto& z : x) z = Cpx(box(rng), box(rng));
    x = newton_refine(gens, vars, x, 60);
    if (system_residual(gens, vars, x) < tol) return x;
  }
  return std::nullopt;
}

std::vector<Mat2> matrices_at(const TraceSystem& ts, const std::vector<Cpx>& x) {
  std::map<std::string, Cpx> vals;
  for (size_t i = 0; i < ts.variables.size(); ++i) vals[ts.variables[i]] = x[i];
  std::vector<Mat2> mats;
  for (int p = 2; p <= ts.m; ++p) {
    const PolyMat2& X = ts.gen_matrix[p];
    mats.push_back({X.a.is_zero() ? Cpx(0, 0) : X.a.eval_complex(vals),
                    X.b.is_zero() ? Cpx(0, 0) : X.b.eval_complex(vals),
                    X.c.is_zero() ? Cpx(0, 0) : X.c.eval_complex(vals),
                    X.d.is_zero() ? Cpx(0, 0) : X.d.eval_complex(vals)});
  }
  return mats;
}

namespace {

// residual vector of the preimage condition at a numeric assignment:
// trace/det generators plus all relator-image entries minus the identity
std::vector<Cpx> preimage_residual(const TraceSystem& ts, const std::vector<Cpx>& x) {
  std::map<std::string, Cpx> vals;
  for (size_t i = 0; i < ts.variables.size(); ++i) vals[ts.variables[i]] = x[i];
  std::vector<Cpx> out;
  for (const auto& p : ts.base) out.push_back(p.eval_complex(vals));
  const int m = ts.m;
  std::vector<Mat2> gen = matrices_at(ts, x);
  std::vector<Mat2> mats(static_cast<size_t>(m + 1));
  for (int p = 2; p <= m; ++p) mats[p] = gen[static_cast<size_t>(p - 2)];
  (void)m;
  for (const auto& w : ts.relators) {
    Mat2 acc = Mat2::identity();
    for (const auto& [g, e] : w.letters) {
      const Mat2& M = mats[static_cast<size_t>(g + 1)];
      acc = acc * (e > 0 ? M : M.inv_det1());
    }
    out.push_back(acc.a - Cpx(1, 0));
    out.push_back(acc.b);
    out.push_back(acc.c);
    out.push_back(acc.d - Cpx(1, 0));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Cpx>> numeric_preimage_search(const TraceSystem& ts, int starts,
                                                        std::uint64_t rng_seed, double tol) {
  const size_t k = ts.variables.size();
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  const double h = 1e-7;
  for (int s = 0; s < starts; ++s) {
    std::vector<Cpx> x(k);
    for (auto& z : x) z = Cpx(box(rng), box(rng));
    for (int it = 0; it < 60; ++it) {
      std::vector<Cpx> f = preimage_residual(ts, x);
      double worst = 0.0;
      for (Cpx v : f) worst = std::max(worst, std::abs(v));
      if (worst < 1e-14) break;
      std::vector<std::vector<Cpx>> J(f.size(), std::vector<Cpx>(k));
      for (size_t v = 0; v < k; ++v) {
        std::vector<Cpx> xp = x;
        xp[v] += h;
        std::vector<Cpx> fp = preimage_residual(ts, xp);
        for (size_t r = 0; r < f.size(); ++r) J[r][v] = (fp[r] - f[r]) / h;
      }
      std::vector<Cpx> rhs(f.size());
      for (size_t r = 0; r < f.size(); ++r) rhs[r] = -f[r];
      auto step = cpx_least_squares(J, rhs);
      if (step.empty()) break;
      double norm = 0.0;
      for (size_t v = 0; v < k; ++v) {
        x[v] += step[v];
        norm = std::max(norm, std::abs(step[v]));
      }
      if (norm < 1e-14) break;
    }
    std::vector<Cpx> f = preimage_residual(ts, x);
    double worst = 0.0;
    for (Cpx v : f) worst = std::max(worst, std::abs(v));
    if (worst < tol) return x;
  }
  return std::nullopt;
}

}  // namespace ghost
