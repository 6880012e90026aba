#include <CLI11.hpp>
#include <iostream>

#include "cliquealpha/version.hpp"
#include "commands.hpp"

// Exit codes: 0 success, 1 runtime failure (IO, parse, internal), 2 usage or
// argument error.

int main(int argc, char** argv) {
  using namespace cliquealpha::cli;

  CLI::App app{"independence-number bounds, certificates and constructions "
               "for graphs with a prescribed clique count"};
  app.set_version_flag("--version", std::string("cliquealpha ") + cliquealpha::kVersion);
  app.require_subcommand(1);
  app.footer(std::string("CSV schema (analyze/sweep/construct rows):\n  ") +
             kCsvHeader +
             "\nt is counted on the artifact; exact_alpha is empty above the "
             "oracle cap;\nruntime_ms is 0 unless --timing is given, keeping "
             "output byte-reproducible.\nInfeasible sweep cells emit "
             "'#'-prefixed comment rows.");

  AnalyzeOpts an;
  auto* analyze = app.add_subcommand(
      "analyze", "analyze a graph file: clique stats, bounds, certificates");
  analyze->add_option("path", an.path, "graph file")->required();
  analyze->add_option("--format", an.format, "dimacs|edgelist")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  analyze->add_option("--s", an.s, "clique order (default 3)");
  analyze->add_flag("--csv", an.csv, "CSV row to stdout, report to stderr");
  analyze->add_flag("--timing", an.timing, "measured runtime_ms in the CSV row");
  analyze->add_option("--seed", an.seed, "RNG seed (default 1)");
  analyze->add_option("--oracle-cap", an.oracle_cap,
                      "exact alpha only when n <= cap (default 64)");
  analyze->add_option("--retries", an.retries, "sparsification retries (default 64)");
  analyze->add_option("--t2-const", an.t2_const,
                      "constant in the triangle bound (default 1)");
  analyze->add_option("--aks-const", an.aks_const,
                      "constant in the degree/triangle bound (default 1)");

  SweepOpts sw;
  auto* sweep = app.add_subcommand(
      "sweep", "build constructions over a t grid and emit one CSV row per cell");
  sweep->add_option("--n", sw.n, "vertex count")->required();
  sweep->add_option("--s", sw.s, "clique order (default 3)");
  sweep->add_option("--t", sw.t_values, "explicit t values")->delimiter(',');
  sweep->add_option("--t-log", sw.t_log, "log-spaced grid: min,max,points");
  sweep->add_option("--seeds", sw.seeds, "seeds per t value (default 1)");
  sweep->add_option("--seed", sw.seed, "base seed (default 1)");
  sweep->add_flag("--csv", sw.csv, "accepted for symmetry; sweep always emits CSV");
  sweep->add_flag("--timing", sw.timing, "measured runtime_ms per row");
  sweep->add_option("--oracle-cap", sw.oracle_cap, "exact alpha cap (default 64)");
  sweep->add_option("--retries", sw.retries, "sparsification retries (default 64)");
  sweep->add_option("--jobs", sw.jobs, "worker threads (rows stay in grid order)");
  sweep->add_option("--t2-const", sw.t2_const, "triangle bound constant");
  sweep->add_option("--aks-const", sw.aks_const, "degree/triangle bound constant");

  ConstructOpts co;
  auto* construct = app.add_subcommand(
      "construct", "generate an extremal construction and write it to a file");
  construct->add_option("--kind", co.kind, "clique_plus_trianglefree|lex_blowup")
      ->required();
  construct->add_option("--n", co.n, "vertex count")->required();
  construct->add_option("--t", co.t, "target triangle count")->required();
  construct->add_option("--out", co.out, "output graph path")->required();
  construct->add_option("--seed", co.seed, "RNG seed (default 1)");
  construct->add_option("--format", co.format, "dimacs|edgelist")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  construct->add_flag("--exact-t,!--approx-t", co.exact_t,
                      "hit t exactly via triangle top-up (default on)");
  construct->add_flag("--csv", co.csv, "CSV row to stdout, report to stderr");
  construct->add_option("--oracle-cap", co.oracle_cap, "exact alpha cap (default 64)");

  ConstantsOpts cn;
  auto* constants = app.add_subcommand(
      "constants", "solve the constant-constraint chain and print residuals");
  constants->add_option("--s-max", cn.s_max, "largest clique order (default 5)");
  constants->add_option("--c2", cn.c2, "base constant (default 1/3)");
  constants->add_flag("--csv", cn.csv, "machine-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*sweep) return cmd_sweep(sw);
    if (*construct) return cmd_construct(co);
    if (*constants) return cmd_constants(cn);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
