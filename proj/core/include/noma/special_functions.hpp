#pragma once

namespace noma {

/// ln Gamma(x), x > 0.
double log_gamma(double x);

/// Regularized upper incomplete gamma Q(m, x) = Gamma(m, x) / Gamma(m).
/// Integer m uses the finite Poisson sum e^-x sum_{q<m} x^q / q!.
double regularized_upper_gamma(double shape, double x);

/// Regularized lower incomplete gamma P(m, x) = 1 - Q(m, x), evaluated by
/// its own power series where that series is the accurate branch, so
/// small values keep full relative precision.
double regularized_lower_gamma(double shape, double x);

/// True when `shape` is a positive integer representable exactly.
bool is_positive_integer(double shape);

}  // namespace noma
