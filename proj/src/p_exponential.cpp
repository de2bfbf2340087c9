#include "lpball/p_exponential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "lpball/constants.hpp"
#include "lpball/error.hpp"
#include "lpball/special_functions.hpp"

namespace lpball {
namespace {

void require_positive_p(double p, const char* where) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError(fmt::format("{}: p must be positive and finite, got {}", where, p));
  }
}

struct NormalPair {
  double first;
  double second;
};

NormalPair normal_pair(RandomStream& stream) {
  for (;;) {
    const double v1 = 2.0 * stream.uniform() - 1.0;
    const double v2 = 2.0 * stream.uniform() - 1.0;
    const double s = v1 * v1 + v2 * v2;
    if (s >= 1.0 || s == 0.0) continue;
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    return {v1 * factor, v2 * factor};
  }
}

// Gamma(shape) for shape ≥ 1.
double marsaglia_tsang(double shape, RandomStream& stream) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal_variate(stream);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double normalizing_constant(double p) {
  require_positive_p(p, "normalizing_constant");
  return std::exp(-ln_gamma(1.0 / p + 1.0));
}

double normal_variate(RandomStream& stream) { return normal_pair(stream).first; }

double gamma_variate(double shape, RandomStream& stream) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw DomainError(fmt::format("gamma_variate: shape must be positive, got {}", shape));
  }
  if (shape >= 1.0) return marsaglia_tsang(shape, stream);
  const double boosted = marsaglia_tsang(shape + 1.0, stream);
  return std::exp(std::log(boosted) + std::log(stream.uniform()) / shape);
}

PExponential::PExponential(double p) : p_(p) { require_positive_p(p, "PExponential"); }

double PExponential::normalizing_constant() const { return lpball::normalizing_constant(p_); }

double PExponential::sample(RandomStream& stream) const {
  if (p_ == 1.0) return -std::log(stream.uniform());
  if (p_ == 2.0) return std::abs(normal_variate(stream)) * std::numbers::sqrt2 * 0.5;
  const double a = 1.0 / p_;
  const double boosted = marsaglia_tsang(1.0 + a, stream);
  return std::exp(a * std::log(boosted) + std::log(stream.uniform()));
}

void PExponential::fill(std::span<double> x, std::span<double> x_pow,
                        RandomStream& stream) const {
  const std::size_t n = x.size();
  if (p_ == 1.0) {
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = -std::log(stream.uniform());
      x_pow[i] = x[i];
    }
    return;
  }
  if (p_ == 2.0) {
    constexpr double scale = std::numbers::sqrt2 * 0.5;
    std::size_t i = 0;
    for (; i + 1 < n; i += 2) {
      const auto [z1, z2] = normal_pair(stream);
      x[i] = std::abs(z1) * scale;
      x[i + 1] = std::abs(z2) * scale;
      x_pow[i] = x[i] * x[i];
      x_pow[i + 1] = x[i + 1] * x[i + 1];
    }
    if (i < n) {
      x[i] = std::abs(normal_pair(stream).first) * scale;
      x_pow[i] = x[i] * x[i];
    }
    return;
  }
  const double a = 1.0 / p_;
  for (std::size_t i = 0; i < n; ++i) {
    const double log_boosted = std::log(marsaglia_tsang(1.0 + a, stream));
    const double log_u = std::log(stream.uniform());
    x[i] = std::exp(a * log_boosted + log_u);
    x_pow[i] = std::exp(log_boosted + p_ * log_u);
  }
}

LaplaceTransform laplace_transform_xp(double h, double p) {
  require_positive_p(p, "laplace_transform_xp");
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw DomainError(fmt::format("laplace_transform_xp: h must be non-negative, got {}", h));
  }
  LaplaceTransform result;
  result.value = std::exp(-std::log1p(h) / p);
  result.lower_bound = std::exp(-h / p);
  result.upper_bound = std::exp(-h / (2.0 * p));
  result.upper_bound_valid = h > 0.0 && h <= 1.0;
  return result;
}

TailBoundPair tail_bounds_xp(double u, const PExponential& law) {
  if (!(u > 0.0)) {
    throw DomainError(fmt::format("tail_bounds_xp: u must be positive, got {}", u));
  }
  const double p = law.p();
  const double c_p = law.normalizing_constant();
  TailBoundPair bounds;
  bounds.lower = c_p / (2.0 * p) * std::exp(-2.0 * u);
  bounds.upper_valid = p >= 1.0;
  if (p >= 1.0 && u >= 1.0) {
    bounds.upper = c_p / p * std::exp(-0.5 * u);
  } else {
    bounds.upper = std::min(1.0, constants::kTailUniversalC * std::exp(-0.5 * u));
  }
  return bounds;
}

double moment_xq(double p, double q) {
  require_positive_p(p, "moment_xq");
  if (!(q >= 0.0) || !std::isfinite(q)) {
    throw DomainError(fmt::format("moment_xq: q must be non-negative, got {}", q));
  }
  // (c_p / p) Γ((q+1)/p) = Γ((q+1)/p) / Γ(1/p)
  return std::exp(ln_gamma((q + 1.0) / p) - ln_gamma(1.0 / p));
}

double qnorm_regime_scale(double p, double q, std::size_t n) {
  if (n < 2) {
    throw DomainError(fmt::format("qnorm_regime_scale: n must be >= 2, got {}", n));
  }
  const double log_n = std::log(static_cast<double>(n));
  if (q <= log_n) {
    return std::pow(q, 1.0 / p) * std::pow(static_cast<double>(n), 1.0 / q);
  }
  return std::pow(log_n, 1.0 / p);
}

std::pair<double, double> expected_qnorm_envelope(double p, double q, std::size_t n) {
  if (!(p >= 1.0) || !(q >= p) || !std::isfinite(q)) {
    throw DomainError(
        fmt::format("expected_qnorm_envelope: need 1 <= p <= q < inf (p={}, q={})", p, q));
  }
  const double scale = qnorm_regime_scale(p, q, n);
  return {constants::kKappaLower * scale, constants::kKappaUpper * scale};
}

}  // namespace lpball
