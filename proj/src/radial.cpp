#include "lpball/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include <fmt/format.h>

#include "lpball/error.hpp"
#include "lpball/oracle.hpp"
#include "lpball/quadrature.hpp"

namespace lpball {

MuEstimator cached_mu(const StatisticCache& cache) {
  MuEstimator mu;
  auto shared = std::make_shared<StatisticCache>(cache);
  mu.value = [shared](double threshold) {
    return static_cast<double>(shared->hits_above(threshold)) /
           static_cast<double>(shared->trials);
  };
  mu.bounds = [shared](double threshold) {
    const auto estimate = shared->estimate(threshold);
    return ProbabilityInterval{estimate.ci_low, estimate.ci_high};
  };
  return mu;
}

MuEstimator indicator_mu(double cutoff) {
  MuEstimator mu;
  mu.value = [cutoff](double threshold) { return threshold < cutoff ? 1.0 : 0.0; };
  mu.breakpoints = {cutoff};
  return mu;
}

MuEstimator oracle_mu(double p, double q, std::size_t n) {
  if (n > 3) throw UnsupportedError(fmt::format("oracle_mu: n = {} > 3 is not supported", n));
  MuEstimator mu;
  mu.value = [=](double threshold) {
    return exact_small_n(p, q, n, threshold, Body::mu_sphere).value;
  };
  mu.bounds = [=](double threshold) {
    const auto r = exact_small_n(p, q, n, threshold, Body::mu_sphere);
    return ProbabilityInterval{std::max(0.0, r.value - r.abs_error_bound),
                               std::min(1.0, r.value + r.abs_error_bound)};
  };
  mu.breakpoints = {1.0, geometric_cap(p, q, n)};
  return mu;
}

namespace {

void check_radial(std::size_t n, double t, int order) {
  if (n < 1) throw DomainError("nu_from_mu: n must be >= 1");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(fmt::format("nu_from_mu: t must be finite and >= 0, got {}", t));
  }
  if (order < 2) throw DomainError(fmt::format("nu_from_mu: quadrature order {} < 2", order));
}

double threshold_at(double t, double s, std::size_t n) {
  if (s <= 0.0) return std::numeric_limits<double>::infinity();
  return t * std::exp(-std::log(s) / static_cast<double>(n));
}

}  // namespace

NuFromMu nu_from_mu(std::size_t n, double t, const MuEstimator& mu, int order) {
  check_radial(n, t, order);
  if (!mu.value) throw DomainError("nu_from_mu: estimator has no value function");
  std::vector<double> cuts{0.0, 1.0};
  if (t > 0.0) {
    for (double tau : mu.breakpoints) {
      if (!(tau > 0.0)) continue;
      const double s = std::exp(static_cast<double>(n) * std::log(t / tau));
      if (s > 0.0 && s < 1.0) cuts.push_back(s);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto fine = gauss_legendre(order);
  const auto coarse = gauss_legendre(std::max(1, order / 2));
  auto at = [&](double s) { return mu.value(threshold_at(t, s, n)); };
  auto low_at = [&](double s) { return mu.bounds(threshold_at(t, s, n)).low; };
  auto high_at = [&](double s) { return mu.bounds(threshold_at(t, s, n)).high; };

  NuFromMu result;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k];
    const double hi = cuts[k + 1];
    const double v = integrate(fine, at, lo, hi);
    result.value += v;
    result.quadrature_error += std::abs(v - integrate(coarse, at, lo, hi));
    if (mu.bounds) {
      result.low += integrate(fine, low_at, lo, hi);
      result.high += integrate(fine, high_at, lo, hi);
    }
  }
  if (!mu.bounds) {
    result.low = result.value;
    result.high = result.value;
  }
  result.low = std::max(0.0, std::min(result.low, result.value) - result.quadrature_error);
  result.high = std::min(1.0, std::max(result.high, result.value) + result.quadrature_error);
  return result;
}

NuFromMu nu_from_mu(std::size_t n, double t, const StatisticCache& cache, int order) {
  check_radial(n, t, order);
  if (t < cache.floor) {
    throw DomainError(
        fmt::format("nu_from_mu: t = {} below the cache floor {}", t, cache.floor));
  }
  if (cache.n != n) {
    throw DomainError(fmt::format("nu_from_mu: cache built for n = {}, asked for n = {}", cache.n, n));
  }
  const auto trials = static_cast<double>(cache.trials);
  const auto dim = static_cast<double>(n);
  NuFromMu result;
  // μ̂(t s^{-1/n}) counts statistics with s > (t / stat)^n.
  double sum = 0.0;
  for (auto it = std::upper_bound(cache.exceedances.begin(), cache.exceedances.end(), t);
       it != cache.exceedances.end(); ++it) {
    sum += -std::expm1(dim * std::log(t / *it));
  }
  result.value = sum / trials;

  const double width = 1.0 / order;
  double low = 0.0;
  double high = 0.0;
  for (int k = 0; k < order; ++k) {
    const double s_lo = k * width;
    const double s_hi = (k + 1) * width;
    if (s_lo > 0.0) low += width * cache.estimate(threshold_at(t, s_lo, n)).ci_low;
    high += width * cache.estimate(threshold_at(t, s_hi, n)).ci_high;
  }
  result.low = std::min(low, result.value);
  result.high = std::max(high, result.value);
  return result;
}

std::string_view to_string(RadialQuadrature quadrature) {
  return quadrature == RadialQuadrature::trapezoid ? "trapezoid" : "gauss_legendre";
}

RadialProfile radial_profile(double t, const MuEstimator& mu, std::span<const double> radii) {
  RadialProfile profile;
  for (double r : radii) {
    if (!(r > 0.0 && r <= 1.0)) {
      throw DomainError(fmt::format("radial_profile: radius {} outside (0, 1]", r));
    }
    profile.grid.push_back(r);
    profile.mu_values.push_back(mu.value(t / r));
  }
  return profile;
}

KsResult radial_cdf_check(double p, std::size_t n, std::span<const SpherePoint> samples) {
  if (samples.empty()) throw DomainError("radial_cdf_check: no samples");
  const auto dim = static_cast<double>(n);
  std::vector<double> radial;
  radial.reserve(samples.size());
  for (const auto& point : samples) {
    if (point.coords.size() != n) throw DomainError("radial_cdf_check: dimension mismatch");
    double sum = 0.0;
    for (double v : point.coords) sum += std::pow(std::abs(v), p);
    if (point.convention.normalization == Normalization::big_l) sum /= dim;
    radial.push_back(sum > 0.0 ? std::exp(dim / p * std::log(sum)) : 0.0);
  }
  return ks_test(radial, [](double x) { return std::clamp(x, 0.0, 1.0); });
}

}  // namespace lpball
