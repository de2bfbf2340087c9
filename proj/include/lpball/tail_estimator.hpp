#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpball/geometry.hpp"

namespace lpball {

/// mu_sphere: normalized cone measure on the quadrant of the L_p^n sphere.
/// nu_ball: normalized volume on the L_p^n ball.
enum class Body { mu_sphere, nu_ball };

std::string_view to_string(Body body);

/// One probability μ(‖u‖_{L_q^n} > t) or ν(‖u‖_{L_q^n} > t) to estimate.
/// q may be kInfinity. q == p is accepted (the statistic is then ≡ 1).
struct TailQuery {
  double p = 1.0;
  double q = 2.0;
  std::size_t n = 2;
  double t = 1.0;
  Body body = Body::mu_sphere;
};

/// Throws DomainError unless p > 0, q ≥ p, n ≥ 1 and t > 0.
void validate(const TailQuery& query);

/// n^{1/p − 1/q}: the largest value of ‖u‖_{L_q^n} on the big-L sphere (and
/// ball), attained at multiples of a coordinate vector.
double geometric_cap(double p, double q, std::size_t n);

/// t > T(p, q, n).
bool upper_bound_window(const TailQuery& query);

/// 2 ≤ t ≤ ½ n^{1/p − 1/q}.
bool lower_bound_window(const TailQuery& query);

struct ProbabilityInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Exact binomial (Clopper–Pearson) interval. Zero hits (all hits) give the
/// one-sided upper (lower) limit at the full confidence level.
ProbabilityInterval clopper_pearson(std::uint64_t hits, std::uint64_t trials,
                                    double confidence = 0.99);

struct TailEstimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t chunks = 1;
};

TailEstimate make_estimate(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed,
                           std::uint64_t chunks);

/// How a Monte Carlo campaign is run. Trial i always uses the stream
/// (derived seed, i), so the data depend only on (trials, seed); chunks and
/// workers only affect scheduling. workers = 0 means hardware concurrency.
struct SamplingPlan {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::size_t chunks = 16;
  std::size_t workers = 0;
};

/// Decay constants used by the bound envelope.
struct DecayConstants {
  double c = 0.0;      // upper-bound constant γ/p · min(1, q/p − 1)
  double C = 0.0;      // lower-bound constant Γ/p
  bool moreover = false;  // q > 2p: the explicit-constant regime
};

DecayConstants decay_constants(double p, double q);

/// T(p, q, n): τ min{q, ln n}^{1/p} for finite q > 2p; τ_∞ (ln n)^{1/p} for
/// q = ∞; otherwise τ_generic times the moment-norm limit
/// (E x^q)^{1/q} / (E x^p)^{1/p} of the statistic.
double threshold_T(double p, double q, std::size_t n);

struct BoundEnvelope {
  double exponent_arg = 0.0;  // t^p n^{p/q}
  double lower = 0.0;         // exp(−C · exponent_arg)
  double upper = 1.0;         // exp(−c · exponent_arg)
  double c_used = 0.0;
  double C_used = 0.0;
  double T_used = 0.0;
  double cap = 0.0;
  bool upper_valid = false;
  bool lower_valid = false;
  bool moreover = false;
  bool caveat = false;      // p < 1
  bool beyond_cap = false;  // t ≥ cap: the event is empty
};

double exponent_argument(double p, double q, std::size_t n, double t);

BoundEnvelope bound_envelope(const TailQuery& query);

TailEstimate estimate_tail(const TailQuery& query, const SamplingPlan& plan);

/// Estimates for μ(‖u‖_∞ > t); the envelope argument is t^p.
TailEstimate infinity_norm_tail(double p, std::size_t n, double t, const SamplingPlan& plan);

/// Thresholds for one q in a sweep, optionally keeping every statistic above
/// `cache_floor` so further thresholds ≥ floor can be evaluated afterwards.
struct QGrid {
  double q = 2.0;
  std::vector<double> thresholds;
  std::optional<double> cache_floor;
};

/// Sorted statistic values above a floor from one sampling campaign.
struct StatisticCache {
  double p = 1.0;
  double q = 2.0;
  std::size_t n = 1;
  Body body = Body::mu_sphere;
  double floor = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> exceedances;  // ascending

  /// Number of stored statistics strictly greater than t (t ≥ floor).
  std::uint64_t hits_above(double t) const;
  TailEstimate estimate(double t, std::uint64_t chunks = 1) const;
};

struct SweepResult {
  std::vector<std::vector<TailEstimate>> estimates;   // [grid][threshold]
  std::vector<std::optional<StatisticCache>> caches;  // [grid]
};

/// One sampling campaign evaluated at every (q, t) in `grids`. Equal to
/// calling estimate_tail per pair with the same plan, at the cost of one pass.
SweepResult estimate_tail_sweep(double p, std::size_t n, Body body,
                                std::span<const QGrid> grids, const SamplingPlan& plan);

enum class WindowPolicy {
  both_bounds,       // max(2, T) < t ≤ ½ n^{1/p − 1/q}
  upper_bound_only,  // T < t < n^{1/p − 1/q}
};

struct FitPoint {
  double t = 0.0;
  double exponent_arg = 0.0;
  TailEstimate estimate;
  bool admissible = false;
  std::string reason;  // why a point was excluded
};

/// Least-squares fit of −ln p̂ = c · t^p n^{p/q} (through the origin, the
/// form of the concentration bounds). slope_low/high refit with the
/// Clopper–Pearson endpoints.
struct ExponentFit {
  double slope = 0.0;
  double slope_low = 0.0;
  double slope_high = 0.0;
  std::size_t admissible_count = 0;
  std::vector<FitPoint> points;
};

class InsufficientDataError : public std::runtime_error {
 public:
  InsufficientDataError(const std::string& message, std::vector<FitPoint> points)
      : std::runtime_error(message), points_(std::move(points)) {}
  const std::vector<FitPoint>& points() const noexcept { return points_; }

 private:
  std::vector<FitPoint> points_;
};

inline constexpr std::uint64_t kMinFitHits = 50;

/// Fits from already computed estimates (one per threshold).
ExponentFit fit_exponent_from(double p, double q, std::size_t n,
                              std::span<const double> t_grid,
                              std::span<const TailEstimate> estimates,
                              WindowPolicy policy = WindowPolicy::both_bounds,
                              std::uint64_t min_hits = kMinFitHits);

/// Samples the grid and fits. Throws InsufficientDataError with the per-point
/// table when fewer than two points are admissible.
ExponentFit fit_exponent(double p, double q, std::size_t n, std::span<const double> t_grid,
                         const SamplingPlan& plan,
                         WindowPolicy policy = WindowPolicy::both_bounds,
                         std::uint64_t min_hits = kMinFitHits);

/// Log-spaced grid of `points` thresholds from max(2, T) up to the smaller of
/// ½ n^{1/p − 1/q} and the t where the upper envelope exp(−c t^p n^{p/q})
/// falls to `min_predicted`. Empty when that range is empty.
std::vector<double> envelope_t_grid(double p, double q, std::size_t n, std::size_t points,
                                    double min_predicted = 1e-5);

}  // namespace lpball
