#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquealpha::cli {

// Fixed CSV schema shared by analyze/sweep/construct rows.
inline constexpr const char* kCsvHeader =
    "kind,n,m,s,t,d_avg,seed,bound_t1,bound_t2,bound_aks,alg_best,"
    "alg_best_size,exact_alpha,runtime_ms";

struct AnalyzeOpts {
  std::string path;
  std::string format = "dimacs";
  int s = 3;
  bool csv = false;
  bool timing = false;
  std::uint64_t seed = 1;
  int oracle_cap = 64;
  int retries = 64;
  double t2_const = 1.0;
  double aks_const = 1.0;
};

struct SweepOpts {
  std::uint64_t n = 0;
  int s = 3;
  std::vector<std::uint64_t> t_values;   // explicit grid
  std::string t_log;                     // "min,max,points" log spacing
  int seeds = 1;
  std::uint64_t seed = 1;
  bool csv = false;
  bool timing = false;
  int oracle_cap = 64;
  int retries = 64;
  int jobs = 1;
  double t2_const = 1.0;
  double aks_const = 1.0;
};

struct ConstructOpts {
  std::string kind;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "dimacs";
  bool exact_t = true;
  bool csv = false;
  bool timing = false;
  int oracle_cap = 64;
};

struct ConstantsOpts {
  int s_max = 5;
  double c2 = 1.0 / 3.0;
  bool csv = false;
};

int cmd_analyze(const AnalyzeOpts& o);
int cmd_sweep(const SweepOpts& o);
int cmd_construct(const ConstructOpts& o);
int cmd_constants(const ConstantsOpts& o);

}  // namespace cliquealpha::cli
