#include "lpball/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "lpball/error.hpp"

namespace lpball {

QuadratureResult romberg(const std::function<double(double)>& f, double a,
                         double b, double tolerance, int max_levels) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::vector<double> previous;
  std::vector<double> current;
  double h = b - a;
  double trapezoid = 0.5 * h * (f(a) + f(b));
  previous.push_back(trapezoid);
  std::size_t intervals = 1;
  for (int level = 1; level < max_levels; ++level) {
    h *= 0.5;
    double midpoint_sum = 0.0;
    for (std::size_t i = 0; i < intervals; ++i) {
      midpoint_sum += f(a + (2.0 * static_cast<double>(i) + 1.0) * h);
    }
    intervals *= 2;
    trapezoid = 0.5 * trapezoid + h * midpoint_sum;
    current.assign(1, trapezoid);
    double factor = 1.0;
    for (int k = 1; k <= level; ++k) {
      factor *= 4.0;
      current.push_back(current[k - 1] +
                        (current[k - 1] - previous[k - 1]) / (factor - 1.0));
    }
    const double delta = std::abs(current.back() - previous.back());
    result.value = current.back();
    result.levels = level + 1;
    if (level >= 3 && delta < tolerance) {
      result.error_bound = delta;
      result.converged = true;
      return result;
    }
    result.error_bound = delta;
    previous.swap(current);
  }
  result.converged = false;
  return result;
}

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) {
    throw DomainError(fmt::format("gauss_legendre: order must be >= 1, got {}", order));
  }
  GaussLegendreRule rule;
  const auto n = static_cast<std::size_t>(order);
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        const auto jd = static_cast<double>(j);
        p0 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p2) / jd;
      }
      derivative = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
      const double step = p0 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double integrate(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                 double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

namespace {

struct AdaptiveState {
  const std::function<double(double)>& f;
  const GaussLegendreRule& fine;
  const GaussLegendreRule& coarse;
  double tolerance_density;
  int max_depth;
  long panels_left = 1L << 18;
  double error = 0.0;
  bool converged = true;
};

double adaptive_panel(AdaptiveState& state, double a, double b, int depth) {
  const double v_fine = integrate(state.fine, state.f, a, b);
  const double diff = std::abs(v_fine - integrate(state.coarse, state.f, a, b));
  --state.panels_left;
  // a difference at rounding level cannot shrink by splitting
  const bool settled = diff <= state.tolerance_density * (b - a) ||
                       diff <= 8.0 * std::numeric_limits<double>::epsilon() * std::abs(v_fine);
  if (settled || depth >= state.max_depth || state.panels_left <= 0) {
    if (!settled) state.converged = false;
    state.error += diff;
    return v_fine;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_panel(state, a, mid, depth + 1) + adaptive_panel(state, mid, b, depth + 1);
}

}  // namespace

QuadratureResult adaptive_gauss_legendre(const std::function<double(double)>& f, double a,
                                         double b, double tolerance, int max_depth) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  static const GaussLegendreRule fine = gauss_legendre(15);
  static const GaussLegendreRule coarse = gauss_legendre(7);
  AdaptiveState state{f, fine, coarse, tolerance / std::abs(b - a), max_depth};
  result.value = adaptive_panel(state, a, b, 0);
  result.error_bound = state.error;
  result.converged = state.converged;
  result.levels = max_depth;
  return result;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  const double f_hi = f(hi);
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw DomainError(fmt::format("bisect: no sign change on [{}, {}]", lo, hi));
  }
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace lpball
