#pragma once

// Exact closed-form outage of the canonical SINDR
//
//   P_out(v) = 1 - e^{-c Sigma} sum_{q<m0} c^q sum_{t<=q} Sigma^{q-t}/(q-t)!
//              sum_{|l|=t} prod_k Gamma(l_k+m_k)/(l_k! Gamma(m_k))
//                           beta_k^{-m_k} (1/beta_k + c)^{-l_k-m_k},
//   c = v / (beta0 (a - b v)),
//
// valid for integer m0 and a > b v; the outage is 1 otherwise.

#include <cstdint>

#include "noma/model.hpp"

namespace noma {

enum class Scheme { noma, oma };

struct OutageQuery {
  SindrCoefficients coeffs;
  double threshold = 1.0;  // v, linear

  void validate() const;
};

/// Both tails of the outage event. `coverage` is the closed-form series
/// itself and keeps full relative precision when the outage is near 1;
/// `outage` = 1 - coverage.
struct OutageTails {
  double outage = 0.0;
  double coverage = 1.0;
};

/// Expansion terms the closed form would sum for the given shapes.
std::uint64_t closed_form_term_count(int signal_shape, int interferer_count);

/// Configurations above this many terms are refused; use the oracle.
inline constexpr std::uint64_t kMaxClosedFormTerms = 100'000'000;

double outage_closed_form(const OutageQuery& query);
OutageTails outage_closed_form_tails(const OutageQuery& query);

/// Coefficients and threshold for user i decoding its own message under
/// the given scheme. OMA applies the slot-count threshold rule.
OutageQuery make_user_query(const Scenario& scenario, std::size_t user_index,
                            double threshold, Scheme scheme);

double outage_for_user(const Scenario& scenario, std::size_t user_index,
                       double threshold, Scheme scheme);
OutageTails outage_tails_for_user(const Scenario& scenario,
                                  std::size_t user_index, double threshold,
                                  Scheme scheme);

/// Limit of outage_for_user as tx_power grows without bound. Noise and
/// interference vanish relative to the signal, leaving
/// gamma_inf = share X / (A X + (1 + kappa^2) sigma_eps^2).
double outage_floor(const Scenario& scenario, std::size_t user_index,
                    double threshold, Scheme scheme);

}  // namespace noma
