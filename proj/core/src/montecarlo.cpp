#include "noma/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "noma/error.hpp"
#include "noma/parallel.hpp"

namespace noma {
namespace {

OutageEstimate make_estimate(std::uint64_t hits, const McConfig& config) {
  OutageEstimate e;
  e.trials = config.trials;
  e.seed = config.seed;
  e.p_hat = static_cast<double>(hits) / static_cast<double>(config.trials);
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(config.trials));
  return e;
}

std::uint64_t batch_count(const McConfig& config) {
  return (config.trials + config.batch_size - 1) / config.batch_size;
}

}  // namespace

void McConfig::validate() const {
  if (trials < 1) throw ValidationError("Monte Carlo trials must be >= 1");
  if (batch_size < 1) throw ValidationError("Monte Carlo batch_size must be >= 1");
}

InterferenceSampler::InterferenceSampler(std::span<const GammaParams> terms) {
  for (const GammaParams& t : terms) {
    auto it = std::find_if(groups_.begin(), groups_.end(),
                           [&](const GammaParams& g) { return g.scale == t.scale; });
    if (it == groups_.end()) {
      groups_.push_back(t);
    } else {
      it->shape += t.shape;
    }
  }
}

double InterferenceSampler::mean() const {
  double m = 0.0;
  for (const GammaParams& g : groups_) m += g.mean();
  return m;
}

std::vector<OutageEstimate> estimate_outage_curve(
    const SindrCoefficients& coeffs, std::span<const double> thresholds,
    const McConfig& config) {
  config.validate();
  coeffs.validate();
  for (double v : thresholds) {
    if (!(v >= 0.0)) throw ValidationError("outage threshold must be >= 0");
  }

  const std::size_t n_thresholds = thresholds.size();
  std::vector<std::uint64_t> hits(n_thresholds, 0);

  // Thresholds whose outcome is fixed by 0 < gamma < a / b need no samples.
  std::vector<std::size_t> sampled;
  for (std::size_t i = 0; i < n_thresholds; ++i) {
    const double v = thresholds[i];
    if (v == 0.0) continue;
    if (coeffs.a - coeffs.b * v <= 0.0) {
      hits[i] = config.trials;
      continue;
    }
    sampled.push_back(i);
  }

  if (!sampled.empty()) {
    const std::uint64_t n_batches = batch_count(config);
    std::vector<std::uint64_t> per_batch(n_batches * sampled.size(), 0);
    const SindrSampler sampler(coeffs);
    parallel_for(n_batches, config.workers, [&](std::size_t batch) {
      Philox4x32 rng(config.seed, batch);
      const std::uint64_t begin = batch * config.batch_size;
      const std::uint64_t end = std::min(config.trials, begin + config.batch_size);
      std::uint64_t* out = per_batch.data() + batch * sampled.size();
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        const double gamma = sampler(rng);
        for (std::size_t s = 0; s < sampled.size(); ++s) {
          if (gamma < thresholds[sampled[s]]) ++out[s];
        }
      }
    });
    for (std::uint64_t batch = 0; batch < n_batches; ++batch) {
      for (std::size_t s = 0; s < sampled.size(); ++s) {
        hits[sampled[s]] += per_batch[batch * sampled.size() + s];
      }
    }
  }

  std::vector<OutageEstimate> out;
  out.reserve(n_thresholds);
  for (std::uint64_t h : hits) out.push_back(make_estimate(h, config));
  return out;
}

OutageEstimate estimate_outage(const SindrCoefficients& coeffs,
                               double threshold, const McConfig& config) {
  const double v[] = {threshold};
  return estimate_outage_curve(coeffs, v, config).front();
}

}  // namespace noma
