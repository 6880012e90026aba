#include "cliquealpha/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cliquealpha/clique_count.hpp"
#include "cliquealpha/errors.hpp"

namespace cliquealpha {

namespace {
constexpr double kSafety = 0.99;

double eq1_sup(int s) { return std::pow(s, -2.0 / (s - 1)); }

// Right side of (2) as a function of the candidate x = c'_s.
double eq2_rhs(int s, double c_prev, double x) {
  double inner = 1.0 / x - std::pow(s, 2.0 / (s - 1));
  if (inner <= 0.0) return 0.0;
  return c_prev * std::pow(inner, 1.0 / (s - 2));
}

double eq3_factor(int s) {
  return std::pow(2.0, -2.0 * (s + 1) / (static_cast<double>(s) * (s - 1)));
}
}  // namespace

const ConstantEntry& ConstantChain::entry(int s) const {
  if (s < 3 || s > s_max)
    throw std::invalid_argument("no chain entry for s=" + std::to_string(s));
  return entries[static_cast<size_t>(s - 3)];
}

double ConstantChain::cs(int s) const {
  if (s == 2) return c2;
  return entry(s).cs;
}

double ConstantChain::cs_prime(int s) const { return entry(s).cs_prime; }

ConstantChain solve_constant_chain(int s_max, double c2) {
  if (s_max < 3) throw std::invalid_argument("s_max must be >= 3");
  if (!(c2 > 0.0 && c2 <= 1.0 / 3.0))
    throw std::invalid_argument("base constant must satisfy 0 < c2 <= 1/3");

  ConstantChain chain;
  chain.c2 = c2;
  chain.s_max = s_max;

  double c_prev = c2;
  for (int s = 3; s <= s_max; ++s) {
    const double hi_cap = eq1_sup(s);
    // f(x) = rhs(x) - x is strictly decreasing from rhs(0+)>0 to -hi_cap at
    // the (1) boundary, so the binding value is the unique zero crossing.
    double lo = 1e-12, hi = hi_cap * (1.0 - 1e-12);
    auto f = [&](double x) { return eq2_rhs(s, c_prev, x) - x; };
    if (f(lo) <= 0.0)
      throw InfeasibleError("no positive solution of the constant chain at s=" +
                                std::to_string(s),
                            s);
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (f(mid) > 0.0 ? lo : hi) = mid;
    }
    ConstantEntry e;
    e.s = s;
    e.cs_prime_sup = lo;
    e.cs_prime = kSafety * lo;
    e.cs = kSafety * e.cs_prime * eq3_factor(s);

    e.resid_eq1 = eq1_sup(s) - e.cs_prime;
    e.resid_eq2 = eq2_rhs(s, c_prev, e.cs_prime) - e.cs_prime;
    e.resid_eq3 = e.cs_prime * eq3_factor(s) - e.cs;
    if (!(e.cs_prime > 0.0 && e.cs > 0.0 && e.resid_eq1 > 0.0 &&
          e.resid_eq2 > 0.0 && e.resid_eq3 > 0.0))
      throw InfeasibleError("constant chain infeasible after rounding at s=" +
                                std::to_string(s),
                            s);
    if (s == 3) e.delta = solve_delta(e.cs).delta;

    c_prev = e.cs;
    chain.entries.push_back(e);
  }
  return chain;
}

Regime clique_regime(std::uint64_t n, int s, std::uint64_t t) {
  double nd = static_cast<double>(n);
  return static_cast<double>(t) <= std::pow(nd, s / 2.0) ? Regime::SmallT
                                                         : Regime::LargeT;
}

double clique_regime_bound(std::uint64_t n, int s, std::uint64_t t,
                      const ConstantChain& chain) {
  if (s < 2) throw std::invalid_argument("s must be >= 2");
  if (t > binomial_capped(n, static_cast<std::uint64_t>(s)))
    throw std::invalid_argument("t exceeds C(n,s)");
  const double c = chain.cs(s);
  const double nd = static_cast<double>(n);
  if (clique_regime(n, s, t) == Regime::SmallT)
    return c * std::pow(nd, 1.0 / (s - 1));
  const double choose2 = s * (s - 1) / 2.0;
  return c * std::pow(std::pow(nd, s) / static_cast<double>(t), 1.0 / choose2);
}

double triangle_regime_threshold(std::uint64_t n) {
  double nd = static_cast<double>(n);
  return std::pow(nd, 1.5) * std::sqrt(std::log(nd));
}

Regime triangle_regime(std::uint64_t n, std::uint64_t t) {
  return static_cast<double>(t) <= triangle_regime_threshold(n) ? Regime::SmallT
                                                         : Regime::LargeT;
}

TriangleBound triangle_regime_bound(std::uint64_t n, std::uint64_t t, double c) {
  if (n <= 1) throw std::invalid_argument("n must exceed 1");
  if (!(c > 0.0)) throw std::invalid_argument("constant must be positive");
  if (t > binomial_capped(n, 3)) throw std::invalid_argument("t exceeds C(n,3)");
  const double nd = static_cast<double>(n);
  TriangleBound r;
  r.regime = triangle_regime(n, t);
  if (r.regime == Regime::SmallT) {
    r.value = c * std::sqrt(nd * std::log(nd));
    return r;
  }
  const double ratio = nd / std::cbrt(static_cast<double>(t));
  if (ratio <= 1.0) {
    r.degenerate = true;
    r.value = 0.0;
    return r;
  }
  r.value = c * ratio * std::pow(std::log(ratio), 2.0 / 3.0);
  return r;
}

AksResult aks_bound(std::uint64_t n, double d, std::uint64_t t, double c) {
  if (!(d > 1.0))
    throw std::invalid_argument("average degree must exceed 1");
  AksResult r;
  const double nd = static_cast<double>(n);
  if (t == 0) {
    r.triangle_free_limit = true;
    r.value = c * nd / d * std::log(d);
    return r;
  }
  r.value = c * nd / d *
            (std::log(d) - 0.5 * std::log(static_cast<double>(t) / nd));
  return r;
}

DeltaSolution solve_delta(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("delta equation needs 0 < c < 1");
  auto lhs = [&](double delta) {
    double root = std::cbrt(delta);
    return c / root * std::pow(std::log(1.0 / root), 2.0 / 3.0);
  };
  double lo = 1e-300, hi = 1.0 - 1e-12;
  if (!(lhs(lo) > 1.0 && lhs(hi) < 1.0))
    throw InfeasibleError("no sign change on the delta bracket (c too large)", 3);
  // lhs is strictly decreasing in delta; bisect lhs(delta) = 1.
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    (lhs(mid) > 1.0 ? lo : hi) = mid;
  }
  DeltaSolution sol;
  sol.delta = 0.5 * (lo + hi);
  sol.residual = std::abs(lhs(sol.delta) - 1.0);
  return sol;
}

double solve_lambda(std::uint64_t n, std::uint64_t t) {
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  if (td < triangle_regime_threshold(n))
    throw std::invalid_argument("t below the blowup regime threshold");
  const double ratio = nd / std::cbrt(td);
  if (!(ratio > 1.0))
    throw std::invalid_argument("n/t^(1/3) must exceed 1");
  return std::pow(td / (std::pow(nd, 1.5) * std::sqrt(std::log(ratio))),
                  2.0 / 3.0);
}

BoundReport make_bound_report(std::uint64_t n, int s, std::uint64_t t, double d_avg,
                              const ConstantChain& chain, double t2_const,
                              double aks_const) {
  BoundReport r;
  r.n = n;
  r.s = s;
  r.t = t;
  r.regime = s == 3 ? triangle_regime(n, t) : clique_regime(n, s, t);
  r.clique_bound = clique_regime_bound(n, s, t, chain);
  r.constants_used = &chain;
  if (s == 3 && n > 1) r.triangle_bound = triangle_regime_bound(n, t, t2_const);
  if (s == 3 && d_avg > 1.0) r.aks = aks_bound(n, d_avg, t, aks_const);
  return r;
}

}  // namespace cliquealpha
