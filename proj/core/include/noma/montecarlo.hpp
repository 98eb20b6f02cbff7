#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "noma/model.hpp"
#include "noma/rng.hpp"

namespace noma {

struct McConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1u << 16;
  /// Scheduling only; results do not depend on it. 0 = all cores.
  unsigned workers = 0;

  void validate() const;
};

struct OutageEstimate {
  double p_hat = 0.0;
  double std_error = 0.0;  // sqrt(p (1 - p) / trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Sampler for the aggregate interference Y = sum_k Gamma(m_k, beta_k).
/// Terms sharing a scale are drawn as one Gamma(sum m_k, beta), which has
/// exactly the same distribution and costs one draw per distinct scale.
class InterferenceSampler {
 public:
  InterferenceSampler() = default;
  explicit InterferenceSampler(std::span<const GammaParams> terms);

  std::span<const GammaParams> groups() const { return groups_; }
  double mean() const;

  template <class Rng>
  double operator()(Rng& rng) const {
    double y = 0.0;
    for (const GammaParams& g : groups_) y += draw_gamma(g.shape, g.scale, rng);
    return y;
  }

 private:
  std::vector<GammaParams> groups_;
};

/// Draws gamma = a X / (b X + Y + Sigma).
class SindrSampler {
 public:
  explicit SindrSampler(const SindrCoefficients& coeffs)
      : coeffs_(coeffs), interference_(coeffs.interf_gammas) {}

  template <class Rng>
  double operator()(Rng& rng) const {
    const double x = draw_gamma(coeffs_.signal_gamma.shape,
                                coeffs_.signal_gamma.scale, rng);
    const double y = interference_(rng);
    return coeffs_.a * x / (coeffs_.b * x + y + coeffs_.sigma_total);
  }

 private:
  SindrCoefficients coeffs_;
  InterferenceSampler interference_;
};

template <class Rng>
double sindr_sample(const SindrCoefficients& coeffs, Rng& rng) {
  return SindrSampler(coeffs)(rng);
}

/// Fraction of trials with gamma < v. Batch n of the trials uses the
/// Philox stream (seed, n); the count is exact integer arithmetic, so the
/// result is bit-identical for any worker count.
OutageEstimate estimate_outage(const SindrCoefficients& coeffs,
                               double threshold, const McConfig& config);

/// One set of SINDR samples thresholded at every v (non-decreasing in v).
std::vector<OutageEstimate> estimate_outage_curve(
    const SindrCoefficients& coeffs, std::span<const double> thresholds,
    const McConfig& config);

}  // namespace noma
