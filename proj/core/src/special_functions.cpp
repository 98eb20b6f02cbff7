#include "noma/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "noma/error.hpp"

namespace noma {
namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// n! for n <= 22 is exactly representable in binary64.
constexpr auto kFactorials = [] {
  std::array<double, 23> f{};
  f[0] = 1.0;
  for (std::size_t n = 1; n < f.size(); ++n) f[n] = f[n - 1] * static_cast<double>(n);
  return f;
}();

void check_args(double shape, double x) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw DomainError("incomplete gamma: shape must be positive and finite");
  }
  if (!(x >= 0.0)) throw DomainError("incomplete gamma: x must be >= 0");
}

// e^-x x^m / Gamma(m + 1), computed in log domain.
double leading_factor(double shape, double x) {
  return std::exp(shape * std::log(x) - x - log_gamma(shape + 1.0));
}

// P(m, x) by sum_{n>=0} x^n / ((m+1)...(m+n)); converges for all x, fast for
// x < m + 1.
double lower_series(double shape, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (shape + n);
    sum += term;
    if (term < sum * kEps) return sum * leading_factor(shape, x);
  }
  throw ConvergenceError("incomplete gamma series did not converge");
}

// Q(m, x) by modified Lentz evaluation of the continued fraction; x >= m + 1.
double upper_continued_fraction(double shape, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - shape;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - shape);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return std::exp(shape * std::log(x) - x - log_gamma(shape)) * h;
    }
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

// e^-x sum_{q<m} x^q / q!.
double poisson_tail(int m, double x) {
  if (x < 700.0) {
    double term = std::exp(-x);
    double sum = term;
    for (int q = 1; q < m; ++q) {
      term *= x / q;
      sum += term;
    }
    return sum;
  }
  // e^-x underflows; keep each term in log domain.
  const double log_x = std::log(x);
  double sum = 0.0;
  for (int q = 0; q < m; ++q) {
    sum += std::exp(q * log_x - x - log_gamma(q + 1.0));
  }
  return sum;
}

}  // namespace

bool is_positive_integer(double shape) {
  return shape >= 1.0 && shape <= 1e9 && std::floor(shape) == shape;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x < static_cast<double>(kFactorials.size()) + 1.0 && std::floor(x) == x) {
    return std::log(kFactorials[static_cast<std::size_t>(x) - 1]);
  }
  return std::lgamma(x);
}

double regularized_upper_gamma(double shape, double x) {
  check_args(shape, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (is_positive_integer(shape) && shape <= 1000.0) {
    return std::min(1.0, poisson_tail(static_cast<int>(shape), x));
  }
  if (x < shape + 1.0) return 1.0 - lower_series(shape, x);
  return upper_continued_fraction(shape, x);
}

double regularized_lower_gamma(double shape, double x) {
  check_args(shape, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < shape + 1.0) return std::min(1.0, lower_series(shape, x));
  return 1.0 - regularized_upper_gamma(shape, x);
}

}  // namespace noma
