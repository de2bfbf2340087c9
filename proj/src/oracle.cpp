#include "lpball/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "lpball/error.hpp"
#include "lpball/quadrature.hpp"
#include "lpball/special_functions.hpp"

namespace lpball {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::closed_form: return "closed_form";
    case OracleMethod::quadrature_1d: return "quadrature_1d";
    case OracleMethod::quadrature_2d: return "quadrature_2d";
    case OracleMethod::high_precision_series: return "high_precision_series";
  }
  return "unknown";
}

namespace {

// ‖n^{1/p} u‖_{L_q^n} for the quadrant-sphere point with u_i^p = w_i.
template <std::size_t N>
double weights_norm(const std::array<double, N>& w, double p, double q) {
  const double n = static_cast<double>(N);
  if (std::isinf(q)) {
    return std::pow(n * *std::max_element(w.begin(), w.end()), 1.0 / p);
  }
  const double r = q / p;
  double sum = 0.0;
  for (double v : w) {
    if (v > 0.0) sum += std::pow(v, r);
  }
  return std::pow(n, 1.0 / p) * std::pow(sum / n, 1.0 / q);
}

double pair_norm(double b, double p, double q) {
  return weights_norm<2>({b, 1.0 - b}, p, q);
}

// ∫_lo^hi g with y = lo + (hi − lo)(3u² − 2u³): the Jacobian vanishes at both
// ends, which removes square-root kinks there.
QuadratureResult smoothstep_integral(const std::function<double(double)>& g, double lo,
                                     double hi, double tolerance, int max_depth) {
  const double width = hi - lo;
  auto mapped = [&](double u) {
    return g(lo + width * u * u * (3.0 - 2.0 * u)) * 6.0 * width * u * (1.0 - u);
  };
  return adaptive_gauss_legendre(mapped, 0.0, 1.0, tolerance, max_depth);
}

// P(f(V) > t) for V ~ Beta(a, a) when f is symmetric about 1/2 and
// decreasing on [0, 1/2].
template <typename F>
double symmetric_tail(F&& f, double a, double t) {
  if (!(f(0.0) > t)) return 0.0;
  if (f(0.5) > t) return 1.0;
  const double x = bisect([&](double v) { return f(v) - t; }, 0.0, 0.5);
  return 2.0 * incomplete_beta(a, a, x);
}

void check_query(double p, double q, std::size_t n, double t) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError(fmt::format("exact_small_n: p must be positive, got {}", p));
  }
  if (!(q >= p)) throw DomainError(fmt::format("exact_small_n: need q >= p (p={}, q={})", p, q));
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError(fmt::format("exact_small_n: t must be positive, got {}", t));
  }
  if (n < 1) throw DomainError("exact_small_n: n must be >= 1");
  if (n > 3) throw UnsupportedError(fmt::format("exact_small_n: n = {} > 3 is not supported", n));
}

OracleResult mu_two(double p, double q, double t) {
  const double a = 1.0 / p;
  const double value = symmetric_tail([&](double b) { return pair_norm(b, p, q); }, a, t);
  return {value, OracleMethod::closed_form, 1e-12};
}

OracleResult nu_two(double p, double q, double t) {
  const double cap = geometric_cap(p, q, 2);
  if (t >= cap) return {0.0, OracleMethod::quadrature_2d, 0.0};
  const double two_pow = std::pow(2.0, 1.0 / p);
  auto radius = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return two_pow * std::pow(std::pow(c, p) + std::pow(s, p), -1.0 / p);
  };
  auto gauge = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    if (std::isinf(q)) return std::max(c, s);
    return std::pow(0.5 * (std::pow(c, q) + std::pow(s, q)), 1.0 / q);
  };
  const double quarter = 0.25 * std::numbers::pi;
  // R·g decreases from the cap at θ = 0 to 1 at θ = π/4.
  double theta1 = quarter;
  if (t > 1.0) {
    theta1 = bisect([&](double th) { return radius(th) * gauge(th) - t; }, 0.0, quarter);
  }
  auto integrand = [&](double th) {
    const double r = radius(th);
    const double inner = t / gauge(th);
    return 0.5 * std::max(0.0, r * r - inner * inner);
  };
  const auto integral = romberg(integrand, 0.0, theta1, 1e-13, 24);
  // area of the big-L ball over eight
  const double area_eighth = std::pow(2.0, 2.0 / p) * 0.5 *
                             std::exp(2.0 * ln_gamma(1.0 + 1.0 / p) - ln_gamma(1.0 + 2.0 / p));
  const double value = std::clamp(integral.value / area_eighth, 0.0, 1.0);
  const double error = integral.converged ? integral.error_bound / area_eighth + 1e-13 : 1.0;
  return {value, OracleMethod::quadrature_2d, error};
}

OracleResult mu_three(double p, double q, double t) {
  const double a = 1.0 / p;
  auto f = [&](double b1, double v) {
    const double rest = 1.0 - b1;
    return weights_norm<3>({b1, rest * v, rest * (1.0 - v)}, p, q);
  };
  auto h = [&](double b1) {
    return symmetric_tail([&](double v) { return f(b1, v); }, a, t);
  };

  // Breakpoints where the conditional tail switches between 0, 1 and the
  // interior regime.
  std::vector<double> cuts{0.0, 0.5, 1.0};
  constexpr int kScan = 4000;
  auto add_roots = [&](auto&& g) {
    double prev = g(0.0);
    for (int i = 1; i <= kScan; ++i) {
      const double x = static_cast<double>(i) / kScan;
      const double cur = g(x);
      if ((prev > 0.0) != (cur > 0.0)) {
        cuts.push_back(bisect(g, static_cast<double>(i - 1) / kScan, x));
      }
      prev = cur;
    }
  };
  add_roots([&](double b1) { return f(b1, 0.0) - t; });
  add_roots([&](double b1) { return f(b1, 0.5) - t; });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double log_norm = -ln_beta(a, 2.0 * a);
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k];
    const double hi = cuts[k + 1];
    QuadratureResult piece;
    if (lo < 0.5) {
      // b1 = y^{1/a} absorbs b1^{a-1}
      auto g = [&](double y) {
        const double b1 = std::pow(y, 1.0 / a);
        return h(b1) * std::exp(log_norm + (2.0 * a - 1.0) * std::log1p(-b1)) / a;
      };
      piece = smoothstep_integral(g, std::pow(lo, a), std::pow(hi, a), 1e-10, 30);
    } else {
      // 1 - b1 = z^{1/(2a)} absorbs (1 - b1)^{2a-1}
      auto g = [&](double z) {
        const double rest = std::pow(z, 0.5 / a);
        const double b1 = 1.0 - rest;
        return h(b1) * std::exp(log_norm + (a - 1.0) * std::log(b1)) / (2.0 * a);
      };
      piece = smoothstep_integral(g, std::pow(1.0 - hi, 2.0 * a), std::pow(1.0 - lo, 2.0 * a),
                                  1e-10, 30);
    }
    value += piece.value;
    error += piece.error_bound;
    converged = converged && piece.converged;
  }
  return {std::clamp(value, 0.0, 1.0), OracleMethod::quadrature_1d,
          converged ? error + 1e-12 : std::max(error, 1e-6)};
}

OracleResult nu_three(double p, double q, double t) {
  const double cap = geometric_cap(p, q, 3);
  if (t >= cap) return {0.0, OracleMethod::quadrature_2d, 0.0};
  // ν(t) = ∫_0^1 μ(t s^{-1/3}) ds; μ = 1 below threshold 1 and 0 above the cap.
  const double s_low = std::pow(t / cap, 3.0);
  const double s_high = std::min(1.0, t * t * t);
  double value = 1.0 - s_high;
  double error = 0.0;
  if (s_high > s_low) {
    double inner_error = 0.0;
    auto mu = [&](double s) {
      const auto r = mu_three(p, q, t * std::cbrt(1.0 / s));
      inner_error = std::max(inner_error, r.abs_error_bound);
      return r.value;
    };
    const auto outer = adaptive_gauss_legendre(mu, s_low, s_high, 1e-8, 16);
    value += outer.value;
    error += outer.error_bound + inner_error * (s_high - s_low);
  }
  return {std::clamp(value, 0.0, 1.0), OracleMethod::quadrature_2d, error + 1e-12};
}

}  // namespace

OracleResult exact_small_n(double p, double q, std::size_t n, double t, Body body) {
  check_query(p, q, n, t);
  if (n == 1) {
    const double value = body == Body::mu_sphere ? (t < 1.0 ? 1.0 : 0.0) : std::max(0.0, 1.0 - t);
    return {value, OracleMethod::closed_form, 0.0};
  }
  if (q == p) {
    // ‖u‖_q ≡ 1 on the sphere, so ν is the radial law 1 − t^n.
    if (body == Body::mu_sphere) return {t < 1.0 ? 1.0 : 0.0, OracleMethod::closed_form, 0.0};
    return {std::max(0.0, 1.0 - std::pow(t, static_cast<double>(n))), OracleMethod::closed_form,
            0.0};
  }
  if (body == Body::mu_sphere && t <= 1.0) return {1.0, OracleMethod::closed_form, 0.0};
  if (body == Body::mu_sphere && t >= geometric_cap(p, q, n)) {
    return {0.0, OracleMethod::closed_form, 0.0};
  }
  if (n == 2) return body == Body::mu_sphere ? mu_two(p, q, t) : nu_two(p, q, t);
  return body == Body::mu_sphere ? mu_three(p, q, t) : nu_three(p, q, t);
}

double beta_coordinate_cdf(double p, std::size_t n, double x) {
  if (!(p > 0.0)) throw DomainError(fmt::format("beta_coordinate_cdf: p must be positive, got {}", p));
  if (n < 1) throw DomainError("beta_coordinate_cdf: n must be >= 1");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(fmt::format("beta_coordinate_cdf: x = {} outside [0, 1]", x));
  }
  if (n == 1) return x >= 1.0 ? 1.0 : 0.0;
  return incomplete_beta(1.0 / p, static_cast<double>(n - 1) / p, x);
}

double reference_tail_xp(double p, double u) {
  if (!(p > 0.0)) throw DomainError(fmt::format("reference_tail_xp: p must be positive, got {}", p));
  if (!(u >= 0.0)) throw DomainError(fmt::format("reference_tail_xp: u must be >= 0, got {}", u));
  if (u == 0.0) return 1.0;
  return gamma_q(1.0 / p, u);
}

double p_exponential_cdf(double p, double t) {
  if (!(p > 0.0)) throw DomainError(fmt::format("p_exponential_cdf: p must be positive, got {}", p));
  if (!(t > 0.0)) return 0.0;
  return gamma_p(1.0 / p, std::pow(t, p));
}

}  // namespace lpball
