#pragma once

#include <cstddef>
#include <string_view>

#include "lpball/tail_estimator.hpp"

namespace lpball {

enum class OracleMethod { closed_form, quadrature_1d, quadrature_2d, high_precision_series };

std::string_view to_string(OracleMethod method);

struct OracleResult {
  double value = 0.0;
  OracleMethod method = OracleMethod::closed_form;
  double abs_error_bound = 0.0;
};

/// μ or ν of {‖u‖_{L_q^n} > t} for n ≤ 3 without sampling.
///
/// n = 1 is closed form. For n = 2 the sphere value uses that the p-th power
/// of the first coordinate is Beta(1/p, 1/p), so the event is a symmetric
/// pair of tails of that law; the ball value is a polar area integral. n = 3
/// nests the same conditional Beta argument inside a 1-D quadrature (sphere)
/// and adds a radial quadrature (ball). Throws UnsupportedError for n > 3.
OracleResult exact_small_n(double p, double q, std::size_t n, double t, Body body);

/// CDF of coords_1^p for a quadrant-sphere point: I_x(1/p, (n−1)/p).
double beta_coordinate_cdf(double p, std::size_t n, double x);

/// P(x^p > u) = Q(1/p, u) for a p-exponential x.
double reference_tail_xp(double p, double u);

/// CDF of the p-exponential law: P(1/p, t^p).
double p_exponential_cdf(double p, double t);

}  // namespace lpball
