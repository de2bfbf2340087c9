#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "lpball/constants.hpp"
#include "lpball/error.hpp"
#include "lpball/goodness_of_fit.hpp"
#include "lpball/oracle.hpp"
#include "lpball/p_exponential.hpp"
#include "lpball/quadrature.hpp"
#include "lpball/special_functions.hpp"

namespace {

using namespace lpball;

constexpr double kLevel = 1e-3;

std::vector<double> draws(double p, std::size_t count, std::uint64_t stream_id) {
  const PExponential law(p);
  RandomStream stream(derive_seed(2026, 11), stream_id);
  std::vector<double> out(count);
  for (auto& v : out) v = law.sample(stream);
  return out;
}

TEST(NormalizingConstant, Examples) {
  EXPECT_DOUBLE_EQ(normalizing_constant(1.0), 1.0);
  EXPECT_NEAR(normalizing_constant(2.0), 2.0 / std::sqrt(std::numbers::pi), 1e-10);
  const double c100 = normalizing_constant(100.0);
  EXPECT_GT(c100, 0.99);
  EXPECT_LT(c100, 1.01);
  EXPECT_THROW(normalizing_constant(0.0), DomainError);
  EXPECT_THROW(normalizing_constant(-2.0), DomainError);
}

TEST(NormalizingConstant, BoundedForLargeP) {
  for (double p = 1.0; p <= 100.0; p *= 1.05) {
    const double c = normalizing_constant(p);
    EXPECT_GE(c, 0.88) << p;
    EXPECT_LE(c, 1.13) << p;
  }
}

TEST(NormalizingConstant, DensityIntegratesToOne) {
  for (double p : {0.5, 1.0, 2.0, 3.0, 10.0}) {
    const double c = normalizing_constant(p);
    const auto density = [&](double t) { return c * std::exp(-std::pow(t, p)); };
    // doubling panels out to where e^{-t^p} < 1e-300
    const double upper = std::pow(700.0, 1.0 / p);
    double total = 0.0;
    for (double lo = 0.0, hi = 0.25; lo < upper; lo = hi, hi *= 2.0) {
      total += adaptive_gauss_legendre(density, lo, std::min(hi, upper), 1e-14).value;
    }
    EXPECT_NEAR(total, 1.0, 1e-10) << "p = " << p;
  }
}

TEST(Sampler, ExponentialCdf) {
  const auto x = draws(1.0, 100000, 1);
  const auto ks = ks_test(x, [](double t) { return 1.0 - std::exp(-t); });
  EXPECT_GT(ks.p_value, kLevel) << "D = " << ks.statistic;
}

TEST(Sampler, HalfNormalMean) {
  const auto x = draws(2.0, 1000000, 2);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : x) {
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(x.size());
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  EXPECT_NEAR(mean, moment_xq(2.0, 1.0), 3.0 * se);
  EXPECT_NEAR(moment_xq(2.0, 1.0), 0.5641895835, 1e-9);
}

TEST(Sampler, PowerIsGammaDistributed) {
  std::uint64_t id = 10;
  for (double p : {0.5, 1.0, 2.0, 5.0}) {
    auto x = draws(p, 100000, id++);
    for (auto& v : x) v = std::pow(v, p);
    const auto ks = ks_test(x, [&](double u) { return gamma_p(1.0 / p, u); });
    EXPECT_GT(ks.p_value, kLevel) << "p = " << p << ", D = " << ks.statistic;
  }
}

TEST(Sampler, FillMatchesLaw) {
  // the batched path must draw from the same law as sample()
  for (double p : {1.0, 2.0, 3.0}) {
    const PExponential law(p);
    RandomStream stream(5, static_cast<std::uint64_t>(p * 100));
    std::vector<double> x(100001);
    std::vector<double> xp(x.size());
    law.fill(x, xp, stream);
    for (std::size_t i = 0; i < x.size(); ++i) {
      ASSERT_GT(x[i], 0.0);
      ASSERT_NEAR(xp[i], std::pow(x[i], p), 1e-12 * std::max(1.0, xp[i]));
    }
    const auto ks = ks_test(x, [&](double t) { return p_exponential_cdf(p, t); });
    EXPECT_GT(ks.p_value, kLevel) << "p = " << p;
  }
}

TEST(GammaVariate, SmallShape) {
  RandomStream stream(17, 0);
  for (double shape : {0.1, 0.5, 1.0, 3.7}) {
    std::vector<double> g(50000);
    for (auto& v : g) v = gamma_variate(shape, stream);
    const auto ks = ks_test(g, [&](double u) { return gamma_p(shape, u); });
    EXPECT_GT(ks.p_value, kLevel) << "shape = " << shape;
  }
  EXPECT_THROW(gamma_variate(0.0, stream), DomainError);
}

TEST(Moments, Examples) {
  EXPECT_NEAR(moment_xq(1.0, 0.0), 1.0, 1e-14);
  EXPECT_NEAR(moment_xq(1.0, 2.0), 2.0, 1e-13);
  EXPECT_NEAR(moment_xq(2.0, 2.0), 0.5, 1e-14);
  // Γ(201) / Γ(200) with both factors beyond the double range
  EXPECT_NEAR(moment_xq(0.005, 0.005), 200.0, 1e-9);
  EXPECT_THROW(moment_xq(1.0, -1.0), DomainError);
}

TEST(Moments, MonteCarloAgreement) {
  std::uint64_t id = 100;
  for (double p : {1.0, 2.0, 4.0}) {
    const auto x = draws(p, 1000000, id++);
    for (double q : {1.0, 2.0, 4.0}) {
      double sum = 0.0;
      double sum_sq = 0.0;
      for (double v : x) {
        const double y = std::pow(v, q);
        sum += y;
        sum_sq += y * y;
      }
      const double n = static_cast<double>(x.size());
      const double mean = sum / n;
      const double se = std::sqrt((sum_sq / n - mean * mean) / n);
      EXPECT_NEAR(mean, moment_xq(p, q), 4.0 * se) << "p = " << p << ", q = " << q;
    }
  }
}

TEST(LaplaceTransform, Examples) {
  EXPECT_DOUBLE_EQ(laplace_transform_xp(0.0, 3.0).value, 1.0);
  EXPECT_NEAR(laplace_transform_xp(1.0, 1.0).value, 0.5, 1e-15);
  EXPECT_NEAR(laplace_transform_xp(3.0, 2.0).value, 0.5, 1e-15);
  EXPECT_THROW(laplace_transform_xp(-0.1, 1.0), DomainError);
}

TEST(LaplaceTransform, MonteCarloAtThreeHalf) {
  const auto x = draws(2.0, 1000000, 7);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : x) {
    const double y = std::exp(-3.0 * v * v);
    sum += y;
    sum_sq += y * y;
  }
  const double n = static_cast<double>(x.size());
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.5, 4.0 * std::sqrt((sum_sq / n - mean * mean) / n));
}

TEST(LaplaceTransform, Sandwich) {
  for (double p : {0.5, 1.0, 2.0, 7.0}) {
    for (double h = 0.01; h <= 1.0; h += 0.01) {
      const auto l = laplace_transform_xp(h, p);
      ASSERT_TRUE(l.upper_bound_valid);
      EXPECT_LE(l.lower_bound, l.value);
      EXPECT_LE(l.value, l.upper_bound);
    }
  }
  EXPECT_FALSE(laplace_transform_xp(2.0, 1.0).upper_bound_valid);
}

TEST(TailBounds, Examples) {
  const auto b1 = tail_bounds_xp(1.0, PExponential(1.0));
  EXPECT_TRUE(b1.upper_valid);
  EXPECT_NEAR(b1.lower, 0.5 * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(b1.upper, std::exp(-0.5), 1e-15);
  EXPECT_LE(b1.lower, std::exp(-1.0));
  EXPECT_GE(b1.upper, std::exp(-1.0));

  const auto b2 = tail_bounds_xp(4.0, PExponential(2.0));
  const double exact = std::erfc(2.0);
  EXPECT_NEAR(exact, 0.004678, 1e-6);
  EXPECT_LE(b2.lower, exact);
  EXPECT_GE(b2.upper, exact);

  const auto b0 = tail_bounds_xp(1e-12, PExponential(1.0));
  EXPECT_NEAR(b0.lower, 0.5, 1e-9);
  EXPECT_LE(b0.upper, 1.0);
  EXPECT_FALSE(tail_bounds_xp(2.0, PExponential(0.5)).upper_valid);
}

TEST(TailBounds, SandwichOnLogGrid) {
  for (double p : {1.0, 2.0, 4.0}) {
    const PExponential law(p);
    const double c = law.normalizing_constant();
    for (int i = 0; i < 20; ++i) {
      const double u = std::exp(std::log(50.0) * i / 19.0);
      const auto bounds = tail_bounds_xp(u, law);
      // exact tail by quadrature of the density over t > u^{1/p}
      const double start = std::pow(u, 1.0 / p);
      const auto integral = adaptive_gauss_legendre(
          [&](double t) { return c * std::exp(-std::pow(t, p)); }, start,
          start + 60.0, 1e-10 * reference_tail_xp(p, u));
      EXPECT_LE(bounds.lower, integral.value) << p << " " << u;
      EXPECT_GE(bounds.upper, integral.value) << p << " " << u;
      EXPECT_NEAR(integral.value, reference_tail_xp(p, u), 1e-12 + 1e-8 * integral.value);
    }
  }
}

TEST(QnormEnvelope, Examples) {
  // q = 1 ≤ ln n needs n ≥ 3
  EXPECT_NEAR(qnorm_regime_scale(1.0, 1.0, 2), std::log(2.0), 1e-15);
  for (std::size_t n : {3u, 10u, 500u}) {
    EXPECT_NEAR(qnorm_regime_scale(1.0, 1.0, n), static_cast<double>(n), 1e-9);
  }
  EXPECT_NEAR(qnorm_regime_scale(1.0, 10.0, 100), std::log(100.0), 1e-12);
  // at q = ln n the branches differ by exactly n^{1/ln n} = e
  const std::size_t n = 55;
  const double q = std::log(55.0);
  const double first = std::pow(q, 0.5) * std::pow(55.0, 1.0 / q);
  const double second = std::pow(std::log(55.0), 0.5);
  EXPECT_NEAR(first / second, std::numbers::e, 1e-12);
  EXPECT_NEAR(qnorm_regime_scale(2.0, q, n), first, 1e-12);
  EXPECT_NEAR(qnorm_regime_scale(2.0, std::nextafter(q, 10.0), n), second, 1e-12);

  const auto [lo, hi] = expected_qnorm_envelope(1.0, 10.0, 100);
  EXPECT_NEAR(lo, constants::kKappaLower * std::log(100.0), 1e-12);
  EXPECT_NEAR(hi, constants::kKappaUpper * std::log(100.0), 1e-12);
  EXPECT_LT(constants::kKappaLower, 1.0);
  EXPECT_GT(constants::kKappaUpper, 1.0);
  EXPECT_THROW(expected_qnorm_envelope(1.0, 2.0, 1), DomainError);
  EXPECT_THROW(expected_qnorm_envelope(0.5, 2.0, 10), DomainError);
}

TEST(PExponential, CaveatBelowOne) {
  EXPECT_TRUE(PExponential(0.7).caveat());
  EXPECT_FALSE(PExponential(1.0).caveat());
  EXPECT_THROW(PExponential(0.0), DomainError);
}

}  // namespace
