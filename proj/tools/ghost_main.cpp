#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ghost/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ghost: trace-free character computations for braid-closure knots"};
  ghost::RunConfig cfg;
  std::string command, knot_pos;

  app.add_option("command", command, "f2 | ghosts | cover | preimage | full")->required();
  app.add_option("knotspec", knot_pos, "knot spec: torus:p,q or braid:m:<letters> [x<r>]");
  app.add_option("--knot", cfg.knot, "knot spec (alternative to the positional)");
  app.add_option("--out", cfg.out_path, "write the JSON report to this path");
  app.add_option("--tol", cfg.tol, "residual tolerance for relation checks");
  app.add_option("--max-pairs", cfg.max_pairs, "Buchberger S-pair cap");
  app.add_option("--max-degree", cfg.max_degree, "Buchberger total-degree cap");
  app.add_flag("--json-only", cfg.json_only, "print JSON to stdout, suppress the summary");
  app.add_flag("--verbose", cfg.verbose, "stage timings on stderr");

  CLI11_PARSE(app, argc, argv);

  cfg.command = command;
  if (cfg.knot.empty()) cfg.knot = knot_pos;

  try {
    if (cfg.knot.empty()) throw ghost::ParseError("no knot spec given");
    if (cfg.command != "f2" && cfg.command != "ghosts" && cfg.command != "cover" &&
        cfg.command != "preimage" && cfg.command != "full")
      throw ghost::ParseError("unknown command '" + cfg.command + "'");
    if (cfg.tol <= 0) throw ghost::ParseError("--tol must be positive");
    if (cfg.max_pairs == 0 || cfg.max_degree == 0)
      throw ghost::ParseError("resource caps must be positive");

    ghost::PipelineResult result = ghost::run_pipeline(cfg);
    ghost::RunOutput out = ghost::render_report(cfg, result);

    if (!cfg.out_path.empty()) {
      std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
      if (!f) throw ghost::InternalError("cannot write " + cfg.out_path);
      f << out.json;
    }
    if (cfg.json_only)
      std::cout << out.json;
    else {
      std::cout << out.summary;
      if (cfg.out_path.empty()) std::cout << out.json;
    }
    return out.exit_code;
  } catch (const ghost::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ghost::ResourceCapError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
