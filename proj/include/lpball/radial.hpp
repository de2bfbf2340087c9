#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "lpball/geometry.hpp"
#include "lpball/goodness_of_fit.hpp"
#include "lpball/tail_estimator.hpp"

namespace lpball {

/// μ(‖u‖_{L_q^n} > τ) as a function of the threshold τ, with an interval.
/// Breakpoints are thresholds where the function is not smooth; the
/// quadrature splits there.
struct MuEstimator {
  std::function<double(double)> value;
  std::function<ProbabilityInterval(double)> bounds;  // may be empty: point values only
  std::vector<double> breakpoints;
};

/// μ̂ from a statistic cache (Clopper–Pearson bounds at every threshold).
MuEstimator cached_mu(const StatisticCache& cache);

/// 1 below `cutoff`, 0 above: the event holds exactly when r > t / cutoff.
MuEstimator indicator_mu(double cutoff);

/// Exact μ from the small-n oracle (n ≤ 3).
MuEstimator oracle_mu(double p, double q, std::size_t n);

struct NuFromMu {
  double value = 0.0;
  double low = 0.0;
  double high = 0.0;
  double quadrature_error = 0.0;
};

/// ν(‖u‖_{L_q^n} > t) = n ∫_0^1 r^{n−1} μ(t/r) dr, evaluated as ∫_0^1 μ(t s^{−1/n}) ds.
/// `order` Gauss–Legendre nodes per panel between breakpoints; the band adds
/// the quadrature error estimate to the integrated μ bounds. order < 2 throws.
NuFromMu nu_from_mu(std::size_t n, double t, const MuEstimator& mu, int order);

/// Same integral for a cache. The point value is exact for the step function
/// μ̂; the band integrates the Clopper–Pearson limits as Darboux sums on
/// `order` equal s-panels, which bracket the integral because μ is monotone
/// in s. Requires t ≥ cache.floor.
NuFromMu nu_from_mu(std::size_t n, double t, const StatisticCache& cache, int order);

enum class RadialQuadrature { trapezoid, gauss_legendre };

std::string_view to_string(RadialQuadrature quadrature);

struct RadialProfile {
  std::vector<double> grid;       // radii in (0, 1]
  std::vector<double> mu_values;  // μ(‖u‖ > t / r)
  RadialQuadrature quadrature = RadialQuadrature::gauss_legendre;
};

RadialProfile radial_profile(double t, const MuEstimator& mu, std::span<const double> radii);

/// KS test of the ball radial law: (Σ|coords|^p)^{n/p} in the small-ell
/// convention is uniform on (0, 1). Points in the big-L convention are
/// rescaled first. Empty input throws.
KsResult radial_cdf_check(double p, std::size_t n, std::span<const SpherePoint> samples);

}  // namespace lpball
