#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "lpball/rng.hpp"

namespace lpball {

/// c_p = p / Γ(1/p), the constant making c_p e^{−t^p} a density on (0, ∞).
/// Throws DomainError for p ≤ 0.
double normalizing_constant(double p);

/// Gamma(shape, 1) variate. Marsaglia–Tsang squeeze for shape ≥ 1; for
/// shape < 1 the boost G(shape + 1) · U^{1/shape}.
double gamma_variate(double shape, RandomStream& stream);

/// Standard normal variate (Marsaglia polar method, second value discarded).
double normal_variate(RandomStream& stream);

/// The p-exponential law: density c_p e^{−t^p} on (0, ∞).
///
/// Draws are exact. For general p a draw is x = G^{1/p} with G ~ Gamma(1/p),
/// generated as x = G'^{1/p} · U with G' ~ Gamma(1 + 1/p) and U uniform, which
/// keeps the Gamma shape ≥ 1 and avoids underflow for large p. p = 1 and p = 2
/// use the exponential and half-normal laws directly.
class PExponential {
 public:
  explicit PExponential(double p);

  double p() const noexcept { return p_; }

  /// Recomputed from p on each call.
  double normalizing_constant() const;

  /// p < 1 is outside the regime of the upper tail bound and of the explicit
  /// concentration constants; results are still computed but flagged.
  bool caveat() const noexcept { return p_ < 1.0; }

  double sample(RandomStream& stream) const;

  /// Fills x with i.i.d. draws and x_pow with x^p. Spans must have equal size.
  void fill(std::span<double> x, std::span<double> x_pow, RandomStream& stream) const;

 private:
  double p_;
};

/// E e^{−h x^p} = (1 + h)^{−1/p}, together with its exponential sandwich.
struct LaplaceTransform {
  double value;
  double lower_bound;         // e^{−h/p}, valid for all h > 0
  double upper_bound;         // e^{−h/(2p)}, valid for 0 < h ≤ 1
  bool upper_bound_valid;
};

LaplaceTransform laplace_transform_xp(double h, double p);

/// Two-sided bound on P(x^p > u).
struct TailBoundPair {
  double lower = 0.0;
  double upper = 1.0;
  bool upper_valid = false;  // requires p ≥ 1
};

/// lower = (c_p / 2p) e^{−2u}; upper = (c_p / p) e^{−u/2} for p ≥ 1, u ≥ 1,
/// otherwise min(1, C e^{−u/2}) with C = constants::kTailUniversalC.
TailBoundPair tail_bounds_xp(double u, const PExponential& law);

/// E x^q = (c_p / p) Γ((q + 1)/p), evaluated in log space.
double moment_xq(double p, double q);

/// Regime formula M(p, q, n) for E(Σ x_i^q)^{1/q}: q^{1/p} n^{1/q} when
/// q ≤ ln n, (ln n)^{1/p} otherwise.
double qnorm_regime_scale(double p, double q, std::size_t n);

/// (κ₁ M, κ₂ M) with the frozen envelope constants. Requires 1 ≤ p ≤ q and
/// n ≥ 2.
std::pair<double, double> expected_qnorm_envelope(double p, double q, std::size_t n);

}  // namespace lpball
