#pragma once

namespace lpball {

/// ln Γ(x) for x > 0 (Lanczos, g = 607/128, 15 terms).
/// Throws DomainError for non-positive or non-finite x.
double ln_gamma(double x);

/// ln B(a, b) = ln Γ(a) + ln Γ(b) − ln Γ(a + b).
double ln_beta(double a, double b);

/// Regularized lower incomplete gamma P(a, x). a > 0, x ≥ 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 − P(a, x), evaluated
/// without cancellation in the upper tail.
double gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
/// a, b > 0, x ∈ [0, 1].
double incomplete_beta(double a, double b, double x);

/// Solves I_x(a, b) = target for x by bisection.
double inverse_incomplete_beta(double a, double b, double target);

}  // namespace lpball
