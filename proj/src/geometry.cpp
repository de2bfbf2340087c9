#include "lpball/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <iostream>

#include <fmt/format.h>

#include "lpball/error.hpp"
#include "lpball/p_exponential.hpp"

namespace lpball {

std::string_view to_string(Normalization normalization) {
  return normalization == Normalization::small_ell ? "small_ell" : "big_l";
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::quadrant_sphere: return "quadrant_sphere";
    case Region::full_sphere: return "full_sphere";
    case Region::full_ball: return "full_ball";
  }
  return "unknown";
}

namespace {

void apply_signs(std::span<double> coords, RandomStream& stream) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i % 64 == 0) bits = stream();
    if (bits & 1u) coords[i] = -coords[i];
    bits >>= 1;
  }
}

double big_l_scale(double p, std::size_t n) {
  return std::pow(static_cast<double>(n), 1.0 / p);
}

}  // namespace

namespace detail {

double scaled_power_mean(std::span<const double> x, double max_x, double q) {
  const double inv = 1.0 / max_x;
  double sum = 0.0;
  const double rounded = std::round(q);
  if (q == rounded && q >= 1.0 && q <= 8.0) {
    const int k = static_cast<int>(rounded);
    for (double v : x) {
      const double y = v * inv;
      double power = y;
      for (int i = 1; i < k; ++i) power *= y;
      sum += power;
    }
    if (k == 1) return sum;
    if (k == 2) return std::sqrt(sum);
  } else if (q == 1.5) {
    for (double v : x) {
      const double y = v * inv;
      sum += y * std::sqrt(y);
    }
  } else {
    for (double v : x) {
      const double y = v * inv;
      if (y > 0.0) sum += std::exp(q * std::log(y));
    }
  }
  return std::pow(sum, 1.0 / q);
}

double ratio_from_sums(std::span<const double> x, double max_x, double sum_pow_p,
                       double p, double q) {
  const double n = static_cast<double>(x.size());
  const double norm_p = std::pow(sum_pow_p, 1.0 / p);
  if (std::isinf(q)) {
    return std::pow(n, 1.0 / p) * max_x / norm_p;
  }
  const double norm_q = max_x * scaled_power_mean(x, max_x, q);
  return std::exp((1.0 / p - 1.0 / q) * std::log(n)) * norm_q / norm_p;
}

double fill_quadrant_sphere(double p, std::span<double> out, std::span<double> scratch,
                            RandomStream& stream) {
  const PExponential law(p);
  double sum_pow = 0.0;
  for (;;) {
    law.fill(out, scratch, stream);
    sum_pow = 0.0;
    for (double v : scratch) sum_pow += v;
    if (sum_pow > 0.0) break;
    std::clog << "lpball: degenerate p-exponential draw (S = 0), resampling\n";
  }
  const double S = std::pow(sum_pow, 1.0 / p);
  const double inv = 1.0 / S;
  for (double& v : out) v *= inv;
  return S;
}

void fill_ball(double p, Normalization normalization, std::span<double> out,
               std::span<double> scratch, RandomStream& stream) {
  fill_quadrant_sphere(p, out, scratch, stream);
  apply_signs(out, stream);
  const double radius = std::exp(std::log(stream.uniform()) / static_cast<double>(out.size()));
  for (double& v : out) v *= radius;
  if (normalization == Normalization::big_l) {
    const double scale = big_l_scale(p, out.size());
    for (double& v : out) v *= scale;
  }
}

}  // namespace detail

namespace {

void check_shape(double p, std::size_t n, const char* where) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError(fmt::format("{}: p must be positive, got {}", where, p));
  }
  if (n < 1) throw DomainError(fmt::format("{}: n must be >= 1", where));
}

#ifndef NDEBUG
void check_on_sphere(const SpherePoint& point) {
  double sum = 0.0;
  for (double v : point.coords) sum += std::pow(std::abs(v), point.convention.p);
  assert(std::abs(sum - 1.0) <= 1e-9 * static_cast<double>(point.coords.size()));
}
#endif

}  // namespace

SpherePoint sample_quadrant_sphere(double p, std::size_t n, RandomStream& stream) {
  check_shape(p, n, "sample_quadrant_sphere");
  SpherePoint point;
  point.convention = {p, n, Normalization::small_ell, Region::quadrant_sphere};
  point.coords.resize(n);
  std::vector<double> scratch(n);
  point.source_S = detail::fill_quadrant_sphere(p, point.coords, scratch, stream);
#ifndef NDEBUG
  check_on_sphere(point);
#endif
  return point;
}

SpherePoint sample_full_sphere(double p, std::size_t n, RandomStream& stream) {
  SpherePoint point = sample_quadrant_sphere(p, n, stream);
  point.convention.region = Region::full_sphere;
  apply_signs(point.coords, stream);
  return point;
}

SpherePoint sample_ball(double p, std::size_t n, Normalization normalization,
                        RandomStream& stream) {
  check_shape(p, n, "sample_ball");
  SpherePoint point;
  point.convention = {p, n, normalization, Region::full_ball};
  point.coords.resize(n);
  std::vector<double> scratch(n);
  detail::fill_ball(p, normalization, point.coords, scratch, stream);
  // S is consumed by the normalisation; recover it from the scratch powers.
  double sum_pow = 0.0;
  for (double v : scratch) sum_pow += v;
  point.source_S = std::pow(sum_pow, 1.0 / p);
  return point;
}

SpherePoint with_normalization(const SpherePoint& point, Normalization normalization) {
  if (point.convention.normalization == normalization) return point;
  SpherePoint result = point;
  const double scale = big_l_scale(point.convention.p, point.convention.n);
  const double factor = normalization == Normalization::big_l ? scale : 1.0 / scale;
  for (double& v : result.coords) v *= factor;
  result.convention.normalization = normalization;
  return result;
}

double big_l_norm(std::span<const double> u, double r) {
  if (u.empty()) throw DomainError("big_l_norm: empty vector");
  if (!(r > 0.0)) throw DomainError(fmt::format("big_l_norm: r must be positive, got {}", r));
  double max_abs = 0.0;
  for (double v : u) {
    if (!std::isfinite(v)) throw DomainError("big_l_norm: non-finite entry");
    max_abs = std::max(max_abs, std::abs(v));
  }
  if (max_abs == 0.0 || std::isinf(r)) return max_abs;
  const double inv = 1.0 / max_abs;
  double sum = 0.0;
  const double rounded = std::round(r);
  if (r == rounded && r <= 8.0) {
    const int k = static_cast<int>(rounded);
    for (double v : u) {
      const double y = std::abs(v) * inv;
      double power = y;
      for (int i = 1; i < k; ++i) power *= y;
      sum += power;
    }
  } else {
    for (double v : u) {
      const double y = std::abs(v) * inv;
      if (y > 0.0) sum += std::exp(r * std::log(y));
    }
  }
  return max_abs * std::pow(sum / static_cast<double>(u.size()), 1.0 / r);
}

double ratio_statistic(std::span<const double> x, double p, double q) {
  if (x.empty()) throw DomainError("ratio_statistic: empty vector");
  if (!(p > 0.0) || !(q >= p)) {
    throw DomainError(fmt::format("ratio_statistic: need 0 < p <= q (p={}, q={})", p, q));
  }
  double max_x = 0.0;
  for (double v : x) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("ratio_statistic: entries must be non-negative and finite");
    }
    max_x = std::max(max_x, v);
  }
  if (max_x == 0.0) throw DomainError("ratio_statistic: all-zero vector");
  // Both norms in max-factored form so large p, q cannot overflow.
  const double n = static_cast<double>(x.size());
  const double scaled_p = detail::scaled_power_mean(x, max_x, p);
  if (std::isinf(q)) return std::pow(n, 1.0 / p) / scaled_p;
  const double scaled_q = detail::scaled_power_mean(x, max_x, q);
  return std::exp((1.0 / p - 1.0 / q) * std::log(n)) * scaled_q / scaled_p;
}

}  // namespace lpball
