#pragma once

#include <string>
#include <vector>

#include "ghost/f2.hpp"
#include "ghost/repvar.hpp"
#include "ghost/slice.hpp"

namespace ghost {

struct RunConfig {
  std::string knot;                     // "torus:p,q" or "braid:m:..."
  std::string command = "full";         // f2 | ghosts | cover | preimage | full
  std::string out_path;                 // JSON file; empty = stdout only
  double tol = kRelationTol;
  std::size_t max_pairs = 1000000;
  unsigned max_degree = 60;
  bool json_only = false;
  bool verbose = false;                 // stage timings on stderr
};

struct RunOutput {
  std::string json;
  std::string summary;
  int exit_code = 0;
};

// Full pipeline result bundled for reporting.
struct PipelineResult {
  BraidWord braid;
  F2Result f2;
  std::vector<GhostReport> ghosts;          // aligned with f2.points
  GroupPresentation wirtinger;
  GroupPresentation reduced_group;
  GroupPresentation cover;
  std::vector<Int> cover_h1;
  std::vector<PreimageReport> preimage;     // aligned with f2.points (ghosts only populated)
  bool ran_ghosts = false, ran_cover = false, ran_preimage = false;
};

PipelineResult run_pipeline(const RunConfig& cfg);
RunOutput render_report(const RunConfig& cfg, const PipelineResult& r);

// deterministic short rendering of a complex number, "0", "-1", "1.3819660113"
std::string fmt_cpx(const Cpx& z);

}  // namespace ghost
