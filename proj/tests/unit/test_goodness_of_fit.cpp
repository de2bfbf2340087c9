#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lpball/error.hpp"
#include "lpball/goodness_of_fit.hpp"
#include "lpball/rng.hpp"

namespace {

using namespace lpball;

std::vector<double> uniforms(std::size_t count, std::uint64_t id) {
  RandomStream s(123, id);
  std::vector<double> u(count);
  for (auto& v : u) v = s.uniform();
  return u;
}

TEST(Kolmogorov, KnownValues) {
  EXPECT_NEAR(kolmogorov_survival(1.0), 0.26999967, 1e-7);
  EXPECT_NEAR(kolmogorov_survival(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(kolmogorov_survival(1.9495), 0.001, 1e-5);
  EXPECT_EQ(kolmogorov_survival(0.0), 1.0);
  EXPECT_LT(kolmogorov_survival(5.0), 1e-20);
}

TEST(KsTest, AcceptsAndRejects) {
  const auto u = uniforms(20000, 1);
  const auto good = ks_test(u, [](double x) { return x; });
  EXPECT_GT(good.p_value, 1e-3);
  EXPECT_EQ(good.samples, 20000u);
  const auto bad = ks_test(u, [](double x) { return x * x; });
  EXPECT_LT(bad.p_value, 1e-6);
  EXPECT_NEAR(bad.statistic, 0.25, 0.02);
}

TEST(KsTest, StatisticOfSinglePoint) {
  const std::vector<double> one{0.3};
  const auto r = ks_test(one, [](double x) { return x; });
  EXPECT_NEAR(r.statistic, 0.7, 1e-15);
  EXPECT_TRUE(r.underpowered);
}

TEST(KsTwoSample, SameAndShifted) {
  const auto a = uniforms(10000, 2);
  const auto b = uniforms(15000, 3);
  EXPECT_GT(ks_two_sample(a, b).p_value, 1e-3);
  auto shifted = b;
  for (auto& v : shifted) v += 0.05;
  EXPECT_LT(ks_two_sample(a, shifted).p_value, 1e-6);
}

TEST(ChiSquare, IndependentAndDependent) {
  const auto x = uniforms(50000, 4);
  const auto y = uniforms(50000, 5);
  const auto independent = chi_square_independence(x, y);
  EXPECT_EQ(independent.df, 81.0);
  EXPECT_GT(independent.p_value, 1e-3);
  std::vector<double> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + 0.3 * y[i];
  EXPECT_LT(chi_square_independence(x, z).p_value, 1e-10);
  EXPECT_THROW(chi_square_independence(std::vector<double>(10, 1.0), std::vector<double>(10, 1.0)),
               DomainError);
}

}  // namespace
