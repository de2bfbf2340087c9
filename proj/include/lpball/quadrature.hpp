#pragma once

#include <functional>
#include <vector>

namespace lpball {

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;  // |last Richardson correction|, or ∞ if not converged
  int levels = 0;
  bool converged = false;
};

/// Romberg integration: trapezoid rule with interval halving and Richardson
/// extrapolation, stopped when two successive extrapolated values differ by
/// less than `tolerance`.
QuadratureResult romberg(const std::function<double(double)>& f, double a,
                         double b, double tolerance = 1e-10, int max_levels = 22);

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Applies a Gauss–Legendre rule on [a, b].
double integrate(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                 double a, double b);

/// Adaptive bisection with a 15-point rule checked against a 7-point rule on
/// each panel; a panel is accepted when the two agree to tolerance · its
/// share of [a, b], or to rounding level. error_bound sums the accepted
/// differences; converged is false when the depth limit or the budget of
/// 2^18 panels stops refinement first.
QuadratureResult adaptive_gauss_legendre(const std::function<double(double)>& f, double a,
                                         double b, double tolerance = 1e-10,
                                         int max_depth = 40);

/// Root of a monotone function on [lo, hi] by bisection; f(lo) and f(hi) must
/// have opposite signs (or one be zero).
double bisect(const std::function<double(double)>& f, double lo, double hi);

}  // namespace lpball
