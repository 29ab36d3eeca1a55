#include "ghost/f2.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ghost/groebner.hpp"
#include "ghost/newton.hpp"
#include "ghost/resultant.hpp"
#include "ghost/roots.hpp"

namespace ghost {

std::string PairSym::name() const {
  std::ostringstream os;
  if (p < 10 && q < 10)
    os << "x" << p << q;
  else
    os << "x" << p << "_" << q;
  return os.str();
}

// ---------------------------------------------------------------------------
// fundamental relations

namespace {

MultiPoly pair_poly(PairSym s) {
  if (s.diagonal()) return MultiPoly::constant(Rat(2));
  return MultiPoly::var(s.name());
}

}  // namespace

MultiPoly FundamentalRelationSet::relation_poly(int a, const Crossing& c) const {
  // x_{over,in} x_{a,over} - x_{a,in} - x_{a,out}
  return pair_poly({c.over_arc, c.in_under_arc}) * pair_poly({a, c.over_arc}) -
         pair_poly({a, c.in_under_arc}) - pair_poly({a, c.out_under_arc});
}

FundamentalRelationSet generate_f2_relations(const KnotDiagram& d) {
  FundamentalRelationSet r;
  r.n = d.arc_count;
  r.crossings = d.crossings;
  r.closure_pairing = d.closure_pairing;
  return r;
}

// ---------------------------------------------------------------------------
// substitution chain

SubstitutionChain::SubstitutionChain(int m, int n, const std::vector<Crossing>& crossings)
    : m_(m), n_(n) {
  rule_.assign(static_cast<size_t>(n + 1), {0, 0});
  for (const auto& c : crossings) {
    if (c.out_under_arc > m) {
      if (rule_[c.out_under_arc].first != 0)
        throw InternalError("substitution chain: arc emitted twice");
      rule_[c.out_under_arc] = {c.over_arc, c.in_under_arc};
    }
  }
  for (int t = m + 1; t <= n; ++t) {
    auto [i, j] = rule_[t];
    if (i == 0) throw InternalError("substitution chain: no crossing emits arc " + std::to_string(t));
    if (i >= t || j >= t)
      throw InternalError("cyclic dependency (non-braid input) at arc " + std::to_string(t));
  }
  for (int t = n; t > m; --t)
    for (int p = t - 1; p >= 1; --p) elim_.push_back(PairSym(p, t));
}

const MultiPoly& SubstitutionChain::seed_poly(PairSym s) const {
  auto it = memo_.find(s);
  if (it != memo_.end()) return it->second;
  MultiPoly result;
  if (s.diagonal()) {
    result = MultiPoly::constant(Rat(2));
  } else if (s.q <= m_) {
    result = MultiPoly::var(s.name());
  } else {
    auto [i, j] = rule_[s.q];
    result = seed_poly({i, j}) * seed_poly({s.p, i}) - seed_poly({s.p, j});
  }
  return memo_.emplace(s, std::move(result)).first->second;
}

Cpx SubstitutionChain::replay(PairSym s, const std::map<PairSym, Cpx>& seed) const {
  std::map<PairSym, Cpx> memo;
  std::function<Cpx(PairSym)> go = [&](PairSym x) -> Cpx {
    if (x.diagonal()) return Cpx(2.0, 0.0);
    if (x.q <= m_) {
      auto it = seed.find(x);
      if (it == seed.end()) throw InternalError("replay: missing seed value " + x.name());
      return it->second;
    }
    auto mit = memo.find(x);
    if (mit != memo.end()) return mit->second;
    auto [i, j] = rule_[x.q];
    Cpx v = go({i, j}) * go({x.p, i}) - go({x.p, j});
    memo.emplace(x, v);
    return v;
  };
  return go(s);
}

QuadVal SubstitutionChain::replay_quad(PairSym s, const std::map<PairSym, QuadVal>& seed,
                                       const QuadCtx& ctx) const {
  std::map<PairSym, QuadVal> memo;
  std::function<QuadVal(PairSym)> go = [&](PairSym x) -> QuadVal {
    if (x.diagonal()) return QuadVal(Rat(2));
    if (x.q <= m_) {
      auto it = seed.find(x);
      if (it == seed.end()) throw InternalError("replay_quad: missing seed value " + x.name());
      return it->second;
    }
    auto mit = memo.find(x);
    if (mit != memo.end()) return mit->second;
    auto [i, j] = rule_[x.q];
    QuadVal v = qsub(qmul(go({i, j}), go({x.p, i}), ctx), go({x.p, j}));
    memo.emplace(x, v);
    return v;
  };
  return go(s);
}

// ---------------------------------------------------------------------------
// elimination to the seed system

std::pair<SubstitutionChain, ReducedPresentation> eliminate_to_seed(const FundamentalRelationSet& rels,
                                                                    int m) {
  SubstitutionChain chain(m, rels.n, rels.crossings);

  // the crossing emitting each seed arc (closure crossings)
  std::vector<const Crossing*> emitter(static_cast<size_t>(m + 1), nullptr);
  for (const auto& c : rels.crossings)
    if (c.out_under_arc <= m) emitter[c.out_under_arc] = &c;
  for (int s = 1; s <= m; ++s)
    if (!emitter[s])
      throw ParseError("strand arc " + std::to_string(s) +
                       " is never an undercrossing output; the braid word is too reduced for the "
                       "strand count (try removing unused strands)");

  ReducedPresentation rp;
  rp.m = m;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) rp.seeds.push_back(PairSym(i, j));
  rp.var_pairs = rp.seeds;
  for (const auto& s : rp.seeds) rp.variables.push_back(s.name());

  auto add_unique = [&rp](MultiPoly p) {
    if (p.is_zero()) return;
    for (const auto& q : rp.defining)
      if (q == p) return;
    rp.defining.push_back(std::move(p));
  };

  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      for (int s : (i == j) ? std::vector<int>{i} : std::vector<int>{i, j}) {
        const Crossing& c = *emitter[s];
        int a = (s == i) ? j : i;
        MultiPoly rhs = chain.seed_poly({c.over_arc, c.in_under_arc}) *
                            chain.seed_poly({a, c.over_arc}) -
                        chain.seed_poly({a, c.in_under_arc});
        MultiPoly lhs = (i == j) ? MultiPoly::constant(Rat(2)) : MultiPoly::var(PairSym(i, j).name());
        add_unique(rhs - lhs);
      }
    }
  }
  return {std::move(chain), std::move(rp)};
}

// ---------------------------------------------------------------------------
// cyclic symmetry of full torus words

namespace {

bool is_full_cycle_word(const BraidWord& b) {
  int m = b.strands;
  if (m < 3) return false;
  size_t block = static_cast<size_t>(m - 1);
  if (b.letters.empty() || b.letters.size() % block != 0) return false;
  for (size_t k = 0; k < b.letters.size(); ++k)
    if (b.letters[k] != static_cast<int>(k % block) + 1) return false;
  return true;
}

}  // namespace

ReducedPresentation symmetry_reduce(const ReducedPresentation& rp, const BraidWord& b) {
  if (!is_full_cycle_word(b)) return rp;
  int m = rp.m;

  SymmetryClasses sc;
  std::set<PairSym> seen;
  auto shift = [m](PairSym s) {
    int p = s.p % m + 1, q = s.q % m + 1;
    return PairSym(p, q);
  };
  for (const auto& s : rp.seeds) {
    if (seen.count(s)) continue;
    std::vector<PairSym> orbit;
    PairSym cur = s;
    do {
      orbit.push_back(cur);
      seen.insert(cur);
      cur = shift(cur);
    } while (!(cur == s));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    sc.classes.push_back(orbit);
  }
  std::sort(sc.classes.begin(), sc.classes.end(),
            [](const auto& a, const auto& b2) { return a.front() < b2.front(); });
  for (const auto& cls : sc.classes)
    for (const auto& s : cls) sc.representative[s] = cls.front();

  ReducedPresentation out;
  out.m = m;
  out.seeds = rp.seeds;
  out.classes = sc;
  out.symmetry_applied = true;
  for (const auto& cls : sc.classes) {
    out.var_pairs.push_back(cls.front());
    out.variables.push_back(cls.front().name());
  }

  std::map<std::string, MultiPoly> bind;
  for (const auto& s : rp.seeds) {
    PairSym rep = sc.representative.at(s);
    if (!(rep == s)) bind[s.name()] = MultiPoly::var(rep.name());
  }
  for (const auto& p : rp.defining) {
    MultiPoly q = p.substitute(bind);
    if (q.is_zero()) continue;
    bool dup = false;
    for (const auto& r : out.defining)
      if (r == q) {
        dup = true;
        break;
      }
    if (!dup) out.defining.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// solving

Cpx F2Point::value(PairSym s) const {
  if (s.diagonal()) return Cpx(2.0, 0.0);
  if (s.q <= 0) throw InternalError("F2Point::value: bad pair");
  auto it = seed.find(s);
  if (it != seed.end()) return it->second;
  if (full) {
    auto jt = full->find(s);
    if (jt != full->end()) return jt->second;
  }
  throw InternalError("F2Point::value: coordinate " + s.name() + " not populated");
}

namespace {

struct UniElim {
  // exact univariate elimination polynomial per variable (dense, monic-ish)
  std::vector<std::vector<Rat>> per_var;
};

std::vector<Rat> exact_uni_gcd_list(const std::vector<std::vector<Rat>>& list) {
  std::vector<Rat> g;
  for (const auto& c : list) {
    if (uni_trim(c).empty()) continue;
    g = g.empty() ? uni_trim(c) : uni_gcd(g, c);
    if (g.size() == 1) return g;  // constant: empty variety
  }
  return g;
}

// dense coefficients of p viewed as univariate in `name`, entries evaluated
// at the complex values of the other variables
std::vector<Cpx> specialize(const MultiPoly& p, const std::string& name,
                            const std::map<std::string, Cpx>& others) {
  auto cs = p.coeffs_in(name);
  std::vector<Cpx> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.eval_complex(others));
  while (!out.empty() && std::abs(out.back()) < 1e-250) out.pop_back();
  return out;
}

const char* kPosDim = "positive-dimensional solution set detected";

}  // namespace

std::vector<F2Point> solve_reduced(const ReducedPresentation& rp) {
  const auto& vars = rp.variables;
  const size_t k = vars.size();
  std::vector<MultiPoly> polys;
  for (const auto& p : rp.defining) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return {};  // inconsistent
    polys.push_back(p);
  }
  if (polys.empty()) throw InternalError(kPosDim);

  UniElim elim;
  elim.per_var.resize(k);

  if (k == 1) {
    std::vector<std::vector<Rat>> cands;
    for (const auto& p : polys) cands.push_back(p.uni_coeffs());
    auto g = exact_uni_gcd_list(cands);
    if (g.empty()) throw InternalError(kPosDim);
    elim.per_var[0] = g;
  } else if (k == 2) {
    for (size_t keep = 0; keep < 2; ++keep) {
      const std::string& drop = vars[1 - keep];
      std::vector<std::vector<Rat>> cands;
      std::vector<const MultiPoly*> with;
      for (const auto& p : polys) {
        if (p.degree_in(drop) > 0)
          with.push_back(&p);
        else
          cands.push_back(p.uni_coeffs());
      }
      for (size_t i = 0; i < with.size(); ++i) {
        for (size_t j = i + 1; j < with.size(); ++j) {
          MultiPoly r = resultant(*with[i], *with[j], drop);
          if (!r.is_zero()) cands.push_back(r.primitive_part().uni_coeffs());
        }
      }
      auto g = exact_uni_gcd_list(cands);
      if (g.empty()) throw InternalError(kPosDim);
      elim.per_var[keep] = g;
    }
  } else {
    // lex elimination per variable: make the kept variable smallest
    for (size_t keep = 0; keep < k; ++keep) {
      std::vector<std::string> prio;
      for (size_t i = 0; i < k; ++i)
        if (i != keep) prio.push_back(vars[i]);
      prio.push_back(vars[keep]);
      GroebnerBasis gb = buchberger(Ideal(polys), MonomialOrder::lex(prio));
      std::vector<Rat> uni;
      for (const auto& g : gb.basis) {
        bool only_keep = true;
        for (const auto& v : g.vars())
          if (v != vars[keep]) only_keep = false;
        if (only_keep && !g.is_constant()) {
          uni = g.uni_coeffs();
          break;
        }
        if (only_keep && g.is_constant() && !g.is_zero()) return {};
      }
      if (uni.empty()) throw InternalError(kPosDim);
      elim.per_var[keep] = uni;
    }
  }

  // numeric candidates per variable
  std::vector<std::vector<Cpx>> var_roots(k);
  for (size_t i = 0; i < k; ++i) {
    auto g = elim.per_var[i];
    if (g.size() <= 1) return {};
    auto rs = uni_roots(g);
    for (const auto& [z, mult] : rs.roots) var_roots[i].push_back(z);
  }

  // assemble candidate points
  std::vector<std::vector<Cpx>> raw;
  if (k == 1) {
    for (Cpx z : var_roots[0]) raw.push_back({z});
  } else if (k == 2) {
    for (Cpx a : var_roots[0]) {
      std::map<std::string, Cpx> bound{{vars[0], a}};
      // common roots in the second variable among all specializations
      std::vector<Cpx> best;
      bool all_vanish = true;
      size_t best_deg = SIZE_MAX;
      for (const auto& p : polys) {
        auto sp = specialize(p, vars[1], bound);
        double mag = 0.0;
        for (Cpx c : sp) mag = std::max(mag, std::abs(c));
        if (mag > 1e-9) all_vanish = false;
        if (sp.size() >= 2 && mag > 1e-9 && sp.size() < best_deg) {
          best_deg = sp.size();
          best = sp;
        }
      }
      if (all_vanish) throw InternalError(kPosDim);
      if (best.empty()) continue;  // no b-dependence left: a must satisfy the rest; filtered below
      for (Cpx broot : aberth_roots(best)) raw.push_back({a, broot});
    }
  } else {
    size_t combos = 1;
    for (const auto& vr : var_roots) {
      combos *= std::max<size_t>(vr.size(), 1);
      if (combos > 200000) throw ResourceCapError("solve_reduced: candidate grid too large");
    }
    std::vector<size_t> idx(k, 0);
    while (true) {
      std::vector<Cpx> pt(k);
      for (size_t i = 0; i < k; ++i) pt[i] = var_roots[i][idx[i]];
      raw.push_back(std::move(pt));
      size_t i = 0;
      while (i < k && ++idx[i] == var_roots[i].size()) idx[i++] = 0;
      if (i == k) break;
    }
  }

  // filter + polish
  auto residual = [&](const std::vector<Cpx>& pt) {
    std::map<std::string, Cpx> vals;
    for (size_t i = 0; i < k; ++i) vals[vars[i]] = pt[i];
    double worst = 0.0;
    for (const auto& p : polys) worst = std::max(worst, std::abs(p.eval_complex(vals)));
    return worst;
  };
  std::vector<std::vector<Cpx>> sols;
  for (auto& pt : raw) {
    if (residual(pt) > 1e-5) continue;
    auto polished = newton_refine(polys, vars, pt, 30);
    if (residual(polished) > kSolveTol) continue;
    bool dup = false;
    for (const auto& s : sols) {
      double d = 0.0;
      for (size_t i = 0; i < k; ++i) d = std::max(d, std::abs(s[i] - polished[i]));
      if (d < 1e-8) {
        dup = true;
        break;
      }
    }
    if (!dup) sols.push_back(std::move(polished));
  }
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i].real() - b[i].real()) > 1e-9) return a[i].real() < b[i].real();
      if (std::abs(a[i].imag() - b[i].imag()) > 1e-9) return a[i].imag() < b[i].imag();
    }
    return false;
  });

  // exact recovery: rational coordinates, then quadratic via conjugate pairing
  struct ExactCand {
    std::optional<QuadCtx> ctx;
    std::vector<QuadVal> coords;
  };
  auto verify_exact = [&](const ExactCand& c) {
    QuadCtx ctx = c.ctx ? *c.ctx : QuadCtx{Rat(0), Rat(0), Cpx(0, 0)};
    std::map<std::string, QuadVal> vals;
    for (size_t i = 0; i < k; ++i) vals[vars[i]] = c.coords[i];
    for (const auto& p : polys)
      if (!p.eval_quad(vals, ctx).is_zero()) return false;
    return true;
  };

  // small exact factors of each variable's elimination polynomial
  std::vector<SmallFactors> facs(k);
  for (size_t i = 0; i < k; ++i) {
    SmallFactors acc;
    for (const auto& [part, mult] : squarefree_decompose(elim.per_var[i])) {
      SmallFactors f = factor_into_small(part);
      acc.linear_roots.insert(acc.linear_roots.end(), f.linear_roots.begin(), f.linear_roots.end());
      acc.quads.insert(acc.quads.end(), f.quads.begin(), f.quads.end());
    }
    facs[i] = std::move(acc);
  }

  std::vector<F2Point> out;
  for (const auto& z : sols) {
    F2Point pt;
    pt.reduced = z;

    // all-rational attempt
    {
      ExactCand cand;
      bool ok = true;
      for (size_t i = 0; i < k && ok; ++i) {
        if (std::abs(z[i].imag()) > 1e-9) {
          ok = false;
          break;
        }
        auto r = rationalize(z[i].real());
        if (!r)
          ok = false;
        else
          cand.coords.emplace_back(*r);
      }
      if (ok && verify_exact(cand)) {
        pt.reduced_exact = cand.coords;
        out.push_back(std::move(pt));
        continue;
      }
    }

    // quadratic attempt: base coordinate carries the field
    bool done = false;
    for (size_t base = 0; base < k && !done; ++base) {
      for (const auto& [s, t] : facs[base].quads) {
        // roots of z^2 = s z + t
        Cpx disc = Cpx(to_double(s) * to_double(s) + 4.0 * to_double(t), 0.0);
        Cpx sq = std::sqrt(disc);
        for (int pick = 0; pick < 2 && !done; ++pick) {
          Cpx root = (Cpx(to_double(s), 0.0) + (pick ? -sq : sq)) / 2.0;
          if (std::abs(root - z[base]) > 1e-6) continue;
          Cpx conj_root = (Cpx(to_double(s), 0.0) + (pick ? sq : -sq)) / 2.0;
          // candidate conjugate partners among the solutions
          for (const auto& z2 : sols) {
            if (std::abs(z2[base] - conj_root) > 1e-6) continue;
            ExactCand cand;
            cand.ctx = QuadCtx{s, t, root};
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i) {
              if (i == base) {
                cand.coords.emplace_back(Rat(0), Rat(1));
                continue;
              }
              Cpx denom = z[base] - z2[base];
              if (std::abs(denom) < 1e-9) {
                ok = false;
                break;
              }
              Cpx vv = (z[i] - z2[i]) / denom;
              Cpx uu = z[i] - vv * z[base];
              if (std::abs(vv.imag()) > 1e-7 || std::abs(uu.imag()) > 1e-7) {
                ok = false;
                break;
              }
              auto ru = rationalize(uu.real(), 1e-7);
              auto rv = rationalize(vv.real(), 1e-7);
              if (!ru || !rv) {
                ok = false;
                break;
              }
              cand.coords.emplace_back(*ru, *rv);
            }
            if (ok && verify_exact(cand)) {
              pt.ext = cand.ctx;
              pt.reduced_exact = cand.coords;
              done = true;
              break;
            }
          }
        }
      }
    }
    out.push_back(std::move(pt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// lifting

void lift_point(F2Point& pt, const SubstitutionChain& chain, const FundamentalRelationSet& rels,
                double tol) {
  const int n = rels.n;
  std::map<PairSym, Cpx> full;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      PairSym s(p, q);
      full[s] = (s.q <= chain.seed_count()) ? pt.seed.at(s) : chain.replay(s, pt.seed);
    }
  auto val = [&](PairSym s) { return s.diagonal() ? Cpx(2.0, 0.0) : full.at(s); };
  double worst = 0.0;
  for (const auto& c : rels.crossings) {
    for (int a = 1; a <= n; ++a) {
      Cpx lhs = val({a, c.out_under_arc});
      Cpx rhs = val({c.over_arc, c.in_under_arc}) * val({a, c.over_arc}) - val({a, c.in_under_arc});
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  if (worst > tol)
    throw InternalError("lift_point: fundamental relation residual " + std::to_string(worst));
  pt.full = std::move(full);
  pt.full_residual_max = worst;
}

// ---------------------------------------------------------------------------
// pipeline

F2Result compute_f2(const BraidWord& b, bool lift_full) {
  F2Result res;
  res.diagram = braid_closure(b);
  res.relations = generate_f2_relations(res.diagram);
  auto [chain, rp0] = eliminate_to_seed(res.relations, b.strands);
  res.chain = std::move(chain);
  res.presentation = symmetry_reduce(rp0, b);
  res.points = solve_reduced(res.presentation);

  // seed expansion through the symmetry classes
  std::map<PairSym, size_t> var_index;
  for (size_t i = 0; i < res.presentation.var_pairs.size(); ++i)
    var_index[res.presentation.var_pairs[i]] = i;
  for (auto& pt : res.points) {
    for (const auto& s : res.presentation.seeds) {
      PairSym rep = res.presentation.classes ? res.presentation.classes->representative.at(s) : s;
      pt.seed[s] = pt.reduced[var_index.at(rep)];
    }
    if (pt.reduced_exact) {
      std::map<PairSym, QuadVal> se;
      for (const auto& s : res.presentation.seeds) {
        PairSym rep = res.presentation.classes ? res.presentation.classes->representative.at(s) : s;
        se[s] = (*pt.reduced_exact)[var_index.at(rep)];
      }
      pt.seed_exact = std::move(se);
    }
    if (lift_full) lift_point(pt, res.chain, res.relations);
  }
  return res;
}

}  // namespace ghost
