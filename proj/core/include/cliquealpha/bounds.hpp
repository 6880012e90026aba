#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cliquealpha {

enum class Regime { SmallT, LargeT };

/// Constants for one clique order s >= 3.
///
/// cs_prime_sup is the supremum allowed by the two structural constraints
///   (1)  c'_s < s^(-2/(s-1))
///   (2)  c'_s <= c_{s-1} * (1/c'_s - s^(2/(s-1)))^(1/(s-2))
/// cs_prime backs off by a 0.99 safety factor so the strict inequalities
/// survive rounding, and cs applies the same factor to
///   (3)  c_s < c'_s * 2^(-2(s+1)/(s(s-1))).
/// Residuals are the (positive) slack of each inequality after rounding.
struct ConstantEntry {
  int s = 0;
  double cs_prime_sup = 0.0;
  double cs_prime = 0.0;
  double cs = 0.0;
  std::optional<double> delta;  // sparsification ceiling, solved for s=3
  double resid_eq1 = 0.0;
  double resid_eq2 = 0.0;
  double resid_eq3 = 0.0;
};

struct ConstantChain {
  double c2 = 0.0;
  int s_max = 2;
  std::vector<ConstantEntry> entries;  // s = 3 .. s_max

  const ConstantEntry& entry(int s) const;
  /// c_s; s=2 returns the base constant.
  double cs(int s) const;
  double cs_prime(int s) const;  // s >= 3
};

/// Solves the chain bottom-up. For each s the binding value of c'_s is found
/// by bisection (c'_s appears on both sides of (2)); all three inequalities
/// are re-verified numerically on the rounded constants. Requires
/// s_max >= 3 and 0 < c2 <= 1/3. Throws InfeasibleError naming the first
/// infeasible order.
ConstantChain solve_constant_chain(int s_max, double c2);

/// alpha(G) >= cs * n^(1/(s-1))            if t <= n^(s/2)
/// alpha(G) >= cs * (n^s/t)^(1/C(s,2))     otherwise.
/// Requires t <= C(n,s) and 2 <= s <= chain.s_max.
double clique_regime_bound(std::uint64_t n, int s, std::uint64_t t,
                      const ConstantChain& chain);
Regime clique_regime(std::uint64_t n, int s, std::uint64_t t);

/// Triangle bound with explicit constant c:
///   c * sqrt(n log n)                                 if t <= n^(3/2) sqrt(log n)
///   c * (n/t^(1/3)) * (log(n/t^(1/3)))^(2/3)          otherwise.
/// Natural logs. In the large-t branch n/t^(1/3) <= 1 makes the log
/// nonpositive; the value is then 0 and `degenerate` is set.
struct TriangleBound {
  double value = 0.0;
  Regime regime = Regime::SmallT;
  bool degenerate = false;
};
TriangleBound triangle_regime_bound(std::uint64_t n, std::uint64_t t, double c);
Regime triangle_regime(std::uint64_t n, std::uint64_t t);
double triangle_regime_threshold(std::uint64_t n);  // n^(3/2) sqrt(log n)

/// (c*n/d) * (log d - 0.5*log(t/n)). Requires d > 1. t = 0 is evaluated as
/// the triangle-free limit (c*n/d)*log d with `triangle_free_limit` set.
/// The value can be negative for t >> n d^2; callers clamp at 1.
struct AksResult {
  double value = 0.0;
  bool triangle_free_limit = false;
};
AksResult aks_bound(std::uint64_t n, double d, std::uint64_t t, double c);

/// Root of (c/delta^(1/3)) * (log(1/delta^(1/3)))^(2/3) = 1 in (0,1), by
/// bisection to 1e-12. Requires 0 < c < 1. Returns the root and the
/// residual |lhs - 1| at the root.
struct DeltaSolution {
  double delta = 0.0;
  double residual = 0.0;
};
DeltaSolution solve_delta(double c);

/// lambda = (t / (n^(3/2) sqrt(log(n/t^(1/3)))))^(2/3): the blowup size
/// whose defining equation t = n^(3/2) lambda^(3/2) sqrt(log(n/t^(1/3)))
/// is explicit in lambda. Requires t >= n^(3/2) sqrt(log n) and
/// n/t^(1/3) > 1.
double solve_lambda(std::uint64_t n, std::uint64_t t);

/// Everything the CLI reports about one (graph, s) pair.
struct BoundReport {
  std::uint64_t n = 0;
  int s = 0;
  std::uint64_t t = 0;
  Regime regime = Regime::SmallT;  // triangle threshold for s=3, clique threshold otherwise
  double clique_bound = 0.0;
  std::optional<TriangleBound> triangle_bound;  // s == 3 only
  std::optional<AksResult> aks;            // d > 1 only
  const ConstantChain* constants_used = nullptr;  // outlives the report
};

BoundReport make_bound_report(std::uint64_t n, int s, std::uint64_t t, double d_avg,
                              const ConstantChain& chain, double t2_const,
                              double aks_const);

}  // namespace cliquealpha
