#include "lpball/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lpball/error.hpp"
#include "lpball/special_functions.hpp"

namespace lpball {

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double stephens_p_value(double d, double n_eff) {
  const double root = std::sqrt(n_eff);
  return kolmogorov_survival((root + 0.12 + 0.11 / root) * d);
}

// Rank class 0..bins-1 of every entry.
std::vector<std::size_t> quantile_classes(std::span<const double> v, std::size_t bins) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  std::vector<std::size_t> cls(v.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    cls[order[rank]] = rank * bins / v.size();
  }
  return cls;
}

}  // namespace

KsResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_test: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  KsResult result;
  result.statistic = d;
  result.samples = sorted.size();
  result.p_value = stephens_p_value(d, n);
  result.underpowered = sorted.size() < kMinKsSamples;
  return result;
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto n = static_cast<double>(x.size());
  const auto m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  KsResult result;
  result.statistic = d;
  result.samples = std::min(x.size(), y.size());
  result.p_value = stephens_p_value(d, n * m / (n + m));
  result.underpowered = result.samples < kMinKsSamples;
  return result;
}

ChiSquareResult chi_square_independence(std::span<const double> x, std::span<const double> y,
                                        std::size_t bins) {
  if (x.size() != y.size()) throw DomainError("chi_square_independence: size mismatch");
  if (bins < 2) throw DomainError("chi_square_independence: need at least 2 bins");
  if (x.size() < 5 * bins * bins) {
    throw DomainError("chi_square_independence: fewer than 5 expected counts per cell");
  }
  const auto cx = quantile_classes(x, bins);
  const auto cy = quantile_classes(y, bins);
  std::vector<double> table(bins * bins, 0.0);
  std::vector<double> row(bins, 0.0);
  std::vector<double> col(bins, 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    table[cx[k] * bins + cy[k]] += 1.0;
    row[cx[k]] += 1.0;
    col[cy[k]] += 1.0;
  }
  const auto total = static_cast<double>(x.size());
  double chi2 = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    for (std::size_t j = 0; j < bins; ++j) {
      const double expected = row[i] * col[j] / total;
      const double diff = table[i * bins + j] - expected;
      chi2 += diff * diff / expected;
    }
  }
  ChiSquareResult result;
  result.statistic = chi2;
  result.df = static_cast<double>((bins - 1) * (bins - 1));
  result.p_value = gamma_q(0.5 * result.df, 0.5 * chi2);
  return result;
}

}  // namespace lpball
