#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "lpball/rng.hpp"

namespace lpball {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// small_ell: Σ|t_i|^p ≤ 1.  big_l: n^{−1} Σ|t_i|^p ≤ 1 (= n^{1/p} · small_ell).
enum class Normalization { small_ell, big_l };

enum class Region { quadrant_sphere, full_sphere, full_ball };

std::string_view to_string(Normalization normalization);
std::string_view to_string(Region region);

struct BodyConvention {
  double p = 1.0;
  std::size_t n = 1;
  Normalization normalization = Normalization::small_ell;
  Region region = Region::quadrant_sphere;
};

struct SpherePoint {
  std::vector<double> coords;
  BodyConvention convention;
  /// S = (Σ x_i^p)^{1/p} of the underlying p-exponential draw. Not part of
  /// the geometric value; kept so the independence of S and the direction
  /// can be tested.
  double source_S = 0.0;
};

/// Uniform (cone) measure on {t ≥ 0 : Σ t_i^p = 1}: (x_1/S, ..., x_n/S) for
/// i.i.d. p-exponential x_i.
SpherePoint sample_quadrant_sphere(double p, std::size_t n, RandomStream& stream);

/// Quadrant sample with independent uniform signs.
SpherePoint sample_full_sphere(double p, std::size_t n, RandomStream& stream);

/// Uniform on the ball: full-sphere point times U^{1/n}, then times n^{1/p}
/// for the big-L convention.
SpherePoint sample_ball(double p, std::size_t n, Normalization normalization,
                        RandomStream& stream);

/// Rescales a point between conventions (factor n^{±1/p}).
SpherePoint with_normalization(const SpherePoint& point, Normalization normalization);

/// ‖u‖_{L_r^n} = (n^{−1} Σ |u_i|^r)^{1/r}; r = ∞ gives max |u_i|. Evaluated in
/// max-factored form. Throws DomainError for an empty vector or r ≤ 0.
double big_l_norm(std::span<const double> u, double r);

/// n^{1/p − 1/q} (Σ x_i^q)^{1/q} / (Σ x_i^p)^{1/p}; for q = ∞ the numerator is
/// n^{1/p} max x_i. Requires 0 < p ≤ q.
double ratio_statistic(std::span<const double> x, double p, double q);

namespace detail {

/// Computes (Σ x_i^q)^{1/q} / max_i x_i for x ≥ 0 with known maximum, using
/// repeated multiplication for small integer q.
double scaled_power_mean(std::span<const double> x, double max_x, double q);

/// Shared kernel of ratio_statistic: the numerator sum Σ x_i^p is supplied.
double ratio_from_sums(std::span<const double> x, double max_x, double sum_pow_p,
                       double p, double q);

/// Writes a quadrant-sphere small-ell point into `out` using `scratch` (both
/// size n) and returns S.
double fill_quadrant_sphere(double p, std::span<double> out, std::span<double> scratch,
                            RandomStream& stream);

/// Writes a uniform ball point into `out`; the same draw sequence as
/// sample_ball.
void fill_ball(double p, Normalization normalization, std::span<double> out,
               std::span<double> scratch, RandomStream& stream);

}  // namespace detail

}  // namespace lpball
