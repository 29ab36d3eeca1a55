#include "ghost/report.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace ghost {

using ordered_json = nlohmann::ordered_json;

std::string fmt_cpx(const Cpx& z) {
  auto fmt_real = [](double x) {
    if (std::abs(x) < 5e-10) return std::string("0");
    double r = std::round(x);
    if (std::abs(x - r) < 5e-10) {
      std::ostringstream os;
      os << static_cast<long long>(r);
      return os.str();
    }
    std::ostringstream os;
    os.precision(10);
    os << std::fixed << x;
    std::string s = os.str();
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  if (std::abs(z.imag()) < 5e-10) return fmt_real(z.real());
  std::string re = fmt_real(z.real()), im = fmt_real(z.imag());
  return re + (im[0] == '-' ? "" : "+") + im + "i";
}

namespace {

ordered_json cpx_json(const Cpx& z) { return ordered_json::array({z.real(), z.imag()}); }

std::string quadval_string(const QuadVal& v) {
  if (v.v == 0) return rat_string(v.u);
  std::string s;
  if (v.u != 0) s += rat_string(v.u);
  if (v.v == 1)
    s += s.empty() ? "r" : "+r";
  else if (v.v == -1)
    s += "-r";
  else {
    std::string c = rat_string(v.v);
    if (!s.empty() && c[0] != '-') s += "+";
    s += c + "*r";
  }
  return s;
}

std::string coord_minpoly(const QuadVal& v, const std::optional<QuadCtx>& ctx) {
  if (v.v == 0) {
    // z - u
    MultiPoly p = MultiPoly::var("z") - MultiPoly::constant(v.u);
    return p.to_string();
  }
  // x = u + v r with r^2 = s r + t  ->  x^2 - (2u + s v) x + (u^2 + s u v - t v^2)
  const Rat& s = ctx->s;
  const Rat& t = ctx->t;
  MultiPoly z = MultiPoly::var("z");
  MultiPoly p = z * z - z * (Rat(2) * v.u + s * v.v) +
                MultiPoly::constant(v.u * v.u + s * v.u * v.v - t * v.v * v.v);
  return p.to_string();
}

ordered_json point_json(const F2Result& f2, const F2Point& pt) {
  ordered_json j;
  ordered_json red;
  for (size_t i = 0; i < f2.presentation.variables.size(); ++i)
    red[f2.presentation.variables[i]] = cpx_json(pt.reduced[i]);
  j["reduced"] = red;
  if (pt.reduced_exact) {
    ordered_json ex;
    ex["base_minpoly"] = pt.ext ? ordered_json(pt.ext->minpoly_string()) : ordered_json(nullptr);
    ordered_json coords, minp;
    for (size_t i = 0; i < f2.presentation.variables.size(); ++i) {
      coords[f2.presentation.variables[i]] = quadval_string((*pt.reduced_exact)[i]);
      minp[f2.presentation.variables[i]] = coord_minpoly((*pt.reduced_exact)[i], pt.ext);
    }
    ex["coords"] = coords;
    j["exact"] = ex;
    j["exact_minpolys"] = minp;
  } else {
    j["exact"] = nullptr;
    j["exact_minpolys"] = nullptr;
  }
  j["full_residual_max"] =
      pt.full_residual_max >= 0 ? ordered_json(pt.full_residual_max) : ordered_json(nullptr);
  return j;
}

std::string point_label(const F2Point& pt) {
  std::string s = "(";
  for (size_t i = 0; i < pt.reduced.size(); ++i) {
    if (i) s += ",";
    s += fmt_cpx(pt.reduced[i]);
  }
  return s + ")";
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg) {
  PipelineResult r;
  auto t0 = std::chrono::steady_clock::now();
  auto stage = [&](const char* name) {
    if (!cfg.verbose) return;
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "[ghost] " << name << " " << std::chrono::duration<double>(t1 - t0).count()
              << " s\n";
    t0 = t1;
  };
  r.braid = parse_knot_spec(cfg.knot);
  bool need_ghosts = cfg.command != "f2" && cfg.command != "cover";
  bool need_cover = cfg.command == "cover" || cfg.command == "preimage" || cfg.command == "full";
  bool need_preimage = cfg.command == "preimage" || cfg.command == "full";

  r.f2 = compute_f2(r.braid, /*lift_full=*/true);
  stage("f2 solve+lift");

  if (need_ghosts) {
    for (const auto& pt : r.f2.points)
      r.ghosts.push_back(classify_ghost(pt, r.braid.strands, r.f2.diagram.arc_count,
                                        RectangleScope::SeedRange, cfg.tol));
    r.ran_ghosts = true;
    stage("ghost classification");
  }
  if (need_cover) {
    r.wirtinger = wirtinger_presentation(r.f2.diagram);
    r.reduced_group = tietze_reduce(r.wirtinger, r.braid.strands);
    r.cover = branched_cover_presentation(r.reduced_group);
    r.cover_h1 = abelianization(r.cover);
    r.ran_cover = true;
    stage("cover presentation");
  }
  if (need_preimage) {
    KnotContext ctx{cfg.knot, r.braid.strands, r.cover};
    BuchbergerCaps caps{cfg.max_pairs, cfg.max_degree};
    r.preimage.resize(r.f2.points.size());
    for (size_t i = 0; i < r.f2.points.size(); ++i) {
      if (!r.ghosts[i].is_ghost) continue;
      r.preimage[i] = preimage_report(r.f2.points[i], true, ctx, caps);
    }
    r.ran_preimage = true;
    stage("preimage certificates");
  }
  return r;
}

RunOutput render_report(const RunConfig& cfg, const PipelineResult& r) {
  RunOutput out;
  ordered_json j;
  j["knot"] = cfg.knot;
  j["command"] = cfg.command;

  std::ostringstream hs;
  hs << "knot: " << cfg.knot << " (braid on " << r.braid.strands << " strands, "
     << r.braid.letters.size() << " letters)\n";
  hs << "diagram: " << r.f2.diagram.arc_count << " arcs, " << r.f2.diagram.crossings.size()
     << " crossings\n";

  // f2 block is always present
  {
    ordered_json f2j;
    ordered_json seeds = ordered_json::array();
    for (const auto& s : r.f2.presentation.variables) seeds.push_back(s);
    f2j["seed_symbols"] = seeds;
    if (r.f2.presentation.classes) {
      ordered_json cls = ordered_json::array();
      for (const auto& c : r.f2.presentation.classes->classes) {
        ordered_json one = ordered_json::array();
        for (const auto& s : c) one.push_back(s.name());
        cls.push_back(one);
      }
      f2j["symmetry_classes"] = cls;
    } else {
      f2j["symmetry_classes"] = nullptr;
    }
    ordered_json defs = ordered_json::array();
    for (const auto& p : r.f2.presentation.defining) defs.push_back(p.to_string());
    f2j["defining_polys"] = defs;
    ordered_json pts = ordered_json::array();
    for (const auto& pt : r.f2.points) pts.push_back(point_json(r.f2, pt));
    f2j["points"] = pts;
    j["f2"] = f2j;

    hs << "seed system: " << r.f2.presentation.variables.size() << " variable"
       << (r.f2.presentation.variables.size() == 1 ? "" : "s") << ", "
       << r.f2.presentation.defining.size() << " defining polynomials"
       << (r.f2.presentation.symmetry_applied ? " (symmetry-reduced)" : "") << "\n";
    hs << "F2 points: " << r.f2.points.size() << "\n";
    for (const auto& pt : r.f2.points) hs << "  " << point_label(pt) << "\n";
  }

  if (r.ran_ghosts) {
    ordered_json gj;
    ordered_json reports = ordered_json::array();
    size_t count = 0;
    std::string names;
    for (size_t i = 0; i < r.ghosts.size(); ++i) {
      const auto& g = r.ghosts[i];
      ordered_json rep;
      rep["point"] = point_label(r.f2.points[i]);
      rep["is_ghost"] = g.is_ghost;
      if (g.failed_rectangle) {
        ordered_json fr;
        fr["type"] = "rectangle";
        fr["indices"] = g.failed_rectangle->indices;
        fr["residual"] = cpx_json(g.failed_rectangle->value);
        if (g.failed_rectangle->exact) fr["residual_exact"] = quadval_string(*g.failed_rectangle->exact);
        rep["failed_relation"] = fr;
      } else if (g.hexagon && !g.hexagon->consistent) {
        ordered_json fh;
        fh["type"] = "hexagon";
        fh["indices"] = g.hexagon->index_set;
        rep["failed_relation"] = fh;
      } else {
        rep["failed_relation"] = nullptr;
      }
      reports.push_back(rep);
      if (g.is_ghost) {
        ++count;
        names += (names.empty() ? "" : ", ") + point_label(r.f2.points[i]);
      }
    }
    gj["count"] = count;
    gj["reports"] = reports;
    j["ghosts"] = gj;
    hs << "ghosts: " << count << (count ? "  [" + names + "]" : "") << "\n";
  }

  if (r.ran_cover) {
    ordered_json cj = ordered_json::parse(presentation_to_json(r.cover));
    ordered_json words = ordered_json::array();
    for (const auto& w : r.cover.relators) words.push_back(r.cover.word_string(w));
    cj["relator_words"] = words;
    ordered_json ab = ordered_json::array();
    for (const auto& d : r.cover_h1) ab.push_back(d.get_str());
    cj["abelianization"] = ab;
    j["cover"] = cj;

    std::string h1;
    if (r.cover_h1.empty())
      h1 = "trivial";
    else
      for (const auto& d : r.cover_h1) h1 += (h1.empty() ? "" : " x ") + (d == 0 ? std::string("Z") : "Z/" + d.get_str());
    hs << "cover group: " << r.cover.generators.size() << " generators, " << r.cover.relators.size()
       << " relators, H1 = " << h1 << "\n";
  }

  if (r.ran_preimage) {
    ordered_json pj = ordered_json::array();
    size_t empties = 0, in_image = 0, inconclusive = 0, ghost_count = 0;
    hs << "preimage verdicts:\n";
    for (size_t i = 0; i < r.f2.points.size(); ++i) {
      if (!r.ghosts[i].is_ghost) continue;
      ++ghost_count;
      const auto& rep = r.preimage[i];
      ordered_json v;
      v["point"] = point_label(r.f2.points[i]);
      std::string verdict = rep.verdict == PreimageReport::Verdict::Empty        ? "empty"
                            : rep.verdict == PreimageReport::Verdict::InImage    ? "in_image"
                                                                                 : "inconclusive";
      v["verdict"] = verdict;
      v["reason"] = rep.reason;
      if (rep.certificate) {
        ordered_json cases = ordered_json::array();
        for (const auto& c : rep.certificate->cases) {
          ordered_json cc;
          cc["normalization"] = c.label;
          ordered_json basis = ordered_json::array();
          for (const auto& b : c.basis.basis) basis.push_back(b.to_string());
          cc["basis"] = basis;
          cc["contains_one"] = c.contains_one;
          cases.push_back(cc);
        }
        v["cases"] = cases;
      }
      if (rep.witness) {
        ordered_json w;
        ordered_json mats = ordered_json::array();
        for (const auto& M : rep.witness->matrices)
          mats.push_back(ordered_json::array(
              {cpx_json(M.a), cpx_json(M.b), cpx_json(M.c), cpx_json(M.d)}));
        w["matrices"] = mats;
        w["accepted"] = rep.witness->accepted;
        w["trace_residual"] = rep.witness->trace_residual;
        w["relator_residual"] = rep.witness->relator_residual;
        v["witness"] = w;
      }
      pj.push_back(v);
      if (rep.verdict == PreimageReport::Verdict::Empty) ++empties;
      if (rep.verdict == PreimageReport::Verdict::InImage) ++in_image;
      if (rep.verdict == PreimageReport::Verdict::Inconclusive) ++inconclusive;
      if (rep.certificate && !rep.certificate->conclusive) out.exit_code = 2;
      hs << "  " << point_label(r.f2.points[i]) << ": " << verdict << " (" << rep.reason << ")\n";
    }
    j["preimage"] = pj;

    ordered_json concl;
    std::string line;
    if (empties > 0)
      line = "h* not surjective";
    else if (inconclusive == 0)
      line = "h* surjective on computed points";
    else
      line = "h* surjectivity undetermined (inconclusive cases)";
    concl["line"] = line;
    concl["h_star_surjective_on_computed_points"] =
        empties == 0 && inconclusive == 0 ? ordered_json(true)
        : empties > 0                     ? ordered_json(false)
                                          : ordered_json(nullptr);
    j["conclusion"] = concl;
    hs << "conclusion: " << line << " (surjective on computed points: "
       << (empties == 0 && inconclusive == 0 ? "yes" : empties > 0 ? "no" : "undetermined") << ")\n";
    (void)ghost_count;
    (void)in_image;
  }

  out.json = j.dump(2) + "\n";
  out.summary = hs.str();
  return out;
}

}  // namespace ghost
