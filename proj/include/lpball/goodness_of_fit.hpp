#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace lpball {

struct KsResult {
  double statistic = 0.0;  // sup |F_n − F|
  double p_value = 1.0;
  std::size_t samples = 0;
  bool underpowered = false;  // fewer than kMinKsSamples observations
};

inline constexpr std::size_t kMinKsSamples = 100;

/// P(K > λ) for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov–Smirnov test against a continuous CDF. The p-value
/// uses Stephens' finite-n correction λ = (√n + 0.12 + 0.11/√n) D.
KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov–Smirnov test with effective size nm/(n + m).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct ChiSquareResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
};

/// Pearson test of independence on a bins × bins table whose cells are the
/// empirical quantile classes of x and y (expected count N / bins²).
ChiSquareResult chi_square_independence(std::span<const double> x, std::span<const double> y,
                                        std::size_t bins = 10);

}  // namespace lpball
