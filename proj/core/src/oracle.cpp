#include "noma/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "noma/error.hpp"
#include "noma/montecarlo.hpp"
#include "noma/parallel.hpp"
#include "noma/rng.hpp"
#include "noma/special_functions.hpp"

namespace noma {
namespace {

// Running mean and centered second moment (Welford), mergeable (Chan).
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const std::uint64_t total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + delta * delta * static_cast<double>(n) *
                     static_cast<double>(o.n) / static_cast<double>(total);
    n = total;
  }
};

// Argument scale c = v / (beta0 (a - b v)) of the inner CDF, or a
// deterministic answer when the query needs no sampling.
struct Prepared {
  bool deterministic = false;
  double value = 0.0;
  double rate = 0.0;
};

Prepared prepare(const OutageQuery& q) {
  q.validate();
  const SindrCoefficients& c = q.coeffs;
  Prepared p;
  if (q.threshold == 0.0) {
    p.deterministic = true;
    p.value = 0.0;
    return p;
  }
  const double margin = c.a - c.b * q.threshold;
  if (margin <= 0.0) {
    p.deterministic = true;
    p.value = 1.0;
    return p;
  }
  p.rate = q.threshold / (c.signal_gamma.scale * margin);
  if (c.interf_gammas.empty()) {
    p.deterministic = true;
    p.value = regularized_lower_gamma(c.signal_gamma.shape, p.rate * c.sigma_total);
  }
  return p;
}

}  // namespace

void OracleConfig::validate() const {
  if (samples < 1) throw ValidationError("oracle samples must be >= 1");
  if (batch_size < 1) throw ValidationError("oracle batch_size must be >= 1");
}

std::vector<OracleEstimate> outage_semi_analytic_shared(
    std::span<const OutageQuery> queries, const OracleConfig& config) {
  config.validate();
  std::vector<OracleEstimate> out(queries.size());
  if (queries.empty()) return out;
  for (const OutageQuery& q : queries) {
    if (q.coeffs.interf_gammas != queries.front().coeffs.interf_gammas) {
      throw ValidationError("shared oracle queries must have identical interference terms");
    }
  }

  std::vector<Prepared> prepared;
  std::vector<std::size_t> sampled;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    prepared.push_back(prepare(queries[i]));
    if (prepared.back().deterministic) {
      out[i].p = prepared.back().value;
    } else {
      sampled.push_back(i);
    }
  }
  if (sampled.empty()) return out;

  const InterferenceSampler interference(queries.front().coeffs.interf_gammas);
  const std::uint64_t n_batches =
      (config.samples + config.batch_size - 1) / config.batch_size;
  std::vector<Moments> per_batch(n_batches * sampled.size());

  parallel_for(n_batches, config.workers, [&](std::size_t batch) {
    Philox4x32 rng(config.seed, batch);
    const std::uint64_t begin = batch * config.batch_size;
    const std::uint64_t end = std::min(config.samples, begin + config.batch_size);
    Moments* acc = per_batch.data() + batch * sampled.size();
    for (std::uint64_t s = begin; s < end; ++s) {
      const double y = interference(rng);
      for (std::size_t j = 0; j < sampled.size(); ++j) {
        const OutageQuery& q = queries[sampled[j]];
        const double z = prepared[sampled[j]].rate * (q.coeffs.sigma_total + y);
        acc[j].push(regularized_lower_gamma(q.coeffs.signal_gamma.shape, z));
      }
    }
  });

  for (std::size_t j = 0; j < sampled.size(); ++j) {
    Moments total;
    for (std::uint64_t batch = 0; batch < n_batches; ++batch) {
      total.merge(per_batch[batch * sampled.size() + j]);
    }
    OracleEstimate& e = out[sampled[j]];
    e.p = std::clamp(total.mean, 0.0, 1.0);
    e.samples = total.n;
    const double var = total.n > 1 ? total.m2 / static_cast<double>(total.n - 1) : 0.0;
    e.std_error = std::sqrt(var / static_cast<double>(total.n));
  }
  return out;
}

OracleEstimate outage_semi_analytic(const SindrCoefficients& coeffs,
                                    double threshold,
                                    const OracleConfig& config) {
  const OutageQuery q[] = {{coeffs, threshold}};
  return outage_semi_analytic_shared(q, config).front();
}

double outage_quadrature_k1(const SindrCoefficients& coeffs, double threshold,
                            double rel_tol) {
  if (coeffs.interf_gammas.size() != 1) {
    throw DomainError("quadrature oracle needs exactly one interferer");
  }
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  const Prepared p = prepare({coeffs, threshold});
  if (p.deterministic) return p.value;

  const double m0 = coeffs.signal_gamma.shape;
  const GammaParams g = coeffs.interf_gammas.front();
  const double log_norm = log_gamma(g.shape);

  // With y = beta_1 u the interferer density becomes u^(m1-1) e^-u / Gamma(m1).
  auto inner = [&](double u) {
    return regularized_lower_gamma(m0, p.rate * (coeffs.sigma_total + g.scale * u));
  };
  auto density_weighted = [&](double u) {
    if (!std::isfinite(u)) return 0.0;
    return inner(u) * std::exp((g.shape - 1.0) * std::log(u) - u - log_norm);
  };

  // tanh-sinh copes with the u^(m1-1) endpoint behaviour on [0, 1]; the
  // smooth tail goes to Gauss-Kronrod.
  boost::math::quadrature::tanh_sinh<double> head_rule;
  using TailRule = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr unsigned kMaxDepth = 30;
  double err_head = 0.0;
  double err_tail = 0.0;
  double l1 = 0.0;
  const double part_head =
      head_rule.integrate(density_weighted, 0.0, 1.0, rel_tol * 1e-2, &err_head, &l1);
  const double part_tail =
      TailRule::integrate(density_weighted, 1.0, std::numeric_limits<double>::infinity(),
                          kMaxDepth, rel_tol * 1e-2, &err_tail);
  const double value = part_head + part_tail;
  if (!std::isfinite(value) || err_head + err_tail > rel_tol * std::abs(value)) {
    throw ConvergenceError("single-interferer quadrature missed rel_tol " +
                           std::to_string(rel_tol));
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace noma
