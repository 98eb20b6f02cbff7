#include "noma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "noma/compositions.hpp"
#include "noma/error.hpp"
#include "noma/special_functions.hpp"

namespace noma {
namespace {

class KahanSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

int signal_shape(const SindrCoefficients& c) {
  if (!is_positive_integer(c.signal_gamma.shape)) {
    throw UnsupportedError(
        "closed form needs an integer signal shape (got " +
        std::to_string(c.signal_gamma.shape) + "); use the oracle instead");
  }
  return static_cast<int>(c.signal_gamma.shape);
}

}  // namespace

void OutageQuery::validate() const {
  coeffs.validate();
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw ValidationError("outage threshold must be finite and >= 0");
  }
}

std::uint64_t closed_form_term_count(int signal_shape, int interferer_count) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (int q = 0; q < signal_shape; ++q) {
    for (int t = 0; t <= q; ++t) {
      const std::uint64_t n =
          interferer_count == 0 ? (t == 0 ? 1 : 0)
                                : composition_count(t, interferer_count);
      if (n > kMax - total) return kMax;
      total += n;
    }
  }
  return total;
}

OutageTails outage_closed_form_tails(const OutageQuery& query) {
  query.validate();
  const SindrCoefficients& c = query.coeffs;
  const double v = query.threshold;
  const int m0 = signal_shape(c);

  if (v == 0.0) return {0.0, 1.0};
  const double margin = c.a - c.b * v;
  if (margin <= 0.0) return {1.0, 0.0};

  const int k_count = static_cast<int>(c.interf_gammas.size());
  if (closed_form_term_count(m0, k_count) > kMaxClosedFormTerms) {
    throw UnsupportedError("closed form would need more than 1e8 terms; "
                           "use the oracle instead");
  }

  const double beta0 = c.signal_gamma.scale;
  const double rate = v / (beta0 * margin);  // c in the series
  const double log_rate = std::log(rate);
  const double log_sigma = std::log(c.sigma_total);

  // part_log[k][l] = ln[ Gamma(l+m_k)/(l! Gamma(m_k)) beta_k^-m_k
  //                      (1/beta_k + rate)^(-l-m_k) ]
  std::vector<std::vector<double>> part_log(static_cast<std::size_t>(k_count));
  for (int k = 0; k < k_count; ++k) {
    const GammaParams& g = c.interf_gammas[static_cast<std::size_t>(k)];
    const double log_inv = std::log(1.0 / g.scale + rate);
    const double base = -g.shape * std::log(g.scale) - log_gamma(g.shape);
    auto& row = part_log[static_cast<std::size_t>(k)];
    row.resize(static_cast<std::size_t>(m0));
    for (int l = 0; l < m0; ++l) {
      row[static_cast<std::size_t>(l)] = base + log_gamma(l + g.shape) -
                                         log_gamma(l + 1.0) -
                                         (l + g.shape) * log_inv;
    }
  }

  KahanSum coverage;
  const double log_prefactor = -rate * c.sigma_total;
  for (int q = 0; q < m0; ++q) {
    for (int t = 0; t <= q; ++t) {
      if (k_count == 0 && t > 0) break;
      const double log_outer = log_prefactor + q * log_rate +
                               (q - t) * log_sigma - log_gamma(q - t + 1.0);
      CompositionCursor cur(t, k_count);
      do {
        double log_term = log_outer;
        const auto parts = cur.current();
        for (std::size_t k = 0; k < parts.size(); ++k) {
          log_term += part_log[k][static_cast<std::size_t>(parts[k])];
        }
        if (std::isnan(log_term)) {
          throw std::logic_error("closed form produced a NaN log-term");
        }
        coverage.add(std::exp(log_term));
      } while (cur.advance());
    }
  }

  const double s = std::clamp(coverage.value(), 0.0, 1.0);
  return {1.0 - s, s};
}

double outage_closed_form(const OutageQuery& query) {
  return outage_closed_form_tails(query).outage;
}

OutageQuery make_user_query(const Scenario& scenario, std::size_t user_index,
                            double threshold, Scheme scheme) {
  if (scheme == Scheme::noma) {
    return {build_sindr_coefficients(scenario, user_index, user_index),
            threshold};
  }
  OmaCoefficients oma = build_oma_coefficients(scenario, user_index);
  return {std::move(oma.coeffs), oma.threshold(threshold)};
}

OutageTails outage_tails_for_user(const Scenario& scenario,
                                  std::size_t user_index, double threshold,
                                  Scheme scheme) {
  return outage_closed_form_tails(
      make_user_query(scenario, user_index, threshold, scheme));
}

double outage_for_user(const Scenario& scenario, std::size_t user_index,
                       double threshold, Scheme scheme) {
  return outage_tails_for_user(scenario, user_index, threshold, scheme).outage;
}

double outage_floor(const Scenario& scenario, std::size_t user_index,
                    double threshold, Scheme scheme) {
  const OutageQuery q = make_user_query(scenario, user_index, threshold, scheme);
  // Normalize by the received-power scale and let it grow: a and b are
  // proportional to it, sigma_total keeps only its CSI term and Y drops out.
  double rho = link_gain(scenario, user_index);
  if (scheme == Scheme::oma && scenario.oma_power == OmaPower::allocated) {
    rho *= scenario.allocation.alphas[user_index - 1];
  }
  const UserLink& user = scenario.users[user_index - 1];
  const double kappa2 = user.hw_impairment * user.hw_impairment;

  OutageQuery limit;
  limit.threshold = q.threshold;
  limit.coeffs.a = q.coeffs.a / rho;
  limit.coeffs.b = q.coeffs.b / rho;
  limit.coeffs.signal_gamma = q.coeffs.signal_gamma;
  const double residual = (1.0 + kappa2) * user.csi_error_var;

  if (limit.coeffs.a - limit.coeffs.b * limit.threshold <= 0.0) return 1.0;
  if (residual == 0.0 || limit.threshold == 0.0) return 0.0;
  limit.coeffs.sigma_total = residual;
  return outage_closed_form(limit);
}

}  // namespace noma
