#pragma once

// Independent evaluation of the outage as the expectation of the exact
// signal CDF over the interference,
//
//   P_out(v) = E_Y[ P(m0, v (Sigma + Y) / (beta0 (a - b v))) ],
//
// with P the regularized lower incomplete gamma. Shares no code with the
// series expansion in analytic.hpp.

#include <cstdint>
#include <span>
#include <vector>

#include "noma/analytic.hpp"
#include "noma/model.hpp"

namespace noma {

struct OracleConfig {
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1u << 16;
  unsigned workers = 0;

  void validate() const;
};

struct OracleEstimate {
  double p = 0.0;
  /// Standard error from the sample variance of the averaged CDF values.
  double std_error = 0.0;
  /// Interference draws used; 0 when the value is deterministic.
  std::uint64_t samples = 0;
};

/// Averaged-CDF estimate. Deterministic when there are no interferers,
/// when v = 0, or when a - b v <= 0. Works for non-integer m0.
OracleEstimate outage_semi_analytic(const SindrCoefficients& coeffs,
                                    double threshold,
                                    const OracleConfig& config);

/// Evaluates several queries that share the same interference terms from
/// one set of draws. Entry n equals outage_semi_analytic(queries[n], ...)
/// bit for bit.
std::vector<OracleEstimate> outage_semi_analytic_shared(
    std::span<const OutageQuery> queries, const OracleConfig& config);

/// Deterministic single-interferer evaluation by adaptive Gauss-Kronrod
/// quadrature. Throws DomainError unless exactly one interferer is given,
/// ConvergenceError if rel_tol is not reached.
double outage_quadrature_k1(const SindrCoefficients& coeffs, double threshold,
                            double rel_tol = 1e-10);

}  // namespace noma
