#include "noma/model.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "noma/error.hpp"

namespace noma {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }
bool finite_non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

void check_user_index(const Scenario& scenario, std::size_t user_index) {
  if (user_index < 1 || user_index > scenario.user_count()) {
    throw DomainError("user index " + std::to_string(user_index) +
                      " outside [1, " + std::to_string(scenario.user_count()) +
                      "]");
  }
}

double estimate_mean_power(const UserLink& user, EstimatePower convention) {
  double omega = user.fading.mean_power;
  if (convention == EstimatePower::one_minus_error) omega -= user.csi_error_var;
  if (!(omega > 0.0)) {
    throw ValidationError(
        "channel-estimate mean power must be positive (mean_power - "
        "csi_error_var <= 0)");
  }
  return omega;
}

std::vector<GammaParams> interference_gammas(const Scenario& scenario,
                                             std::size_t user_index) {
  std::vector<GammaParams> out;
  if (scenario.clusters.empty()) return out;
  const auto& cluster = scenario.clusters[user_index - 1];
  out.reserve(cluster.size());
  for (const Interferer& k : cluster) {
    const double gs = k.side_gain.value_or(scenario.antenna.side_gain);
    const double rho_bar =
        k.tx_power * gs * gs * std::pow(k.distance, -k.fading.path_loss_exp);
    const double zeta = (1.0 + k.hw_impairment * k.hw_impairment) * rho_bar;
    out.push_back({k.fading.shape, zeta * k.fading.gamma_scale()});
  }
  return out;
}

// Coefficients of a receiver whose own signal arrives with power scale rho,
// carries fraction `share` of it, and sees `interfering_share` of it as
// undecoded or residual intra-cell power.
SindrCoefficients assemble(const Scenario& scenario, std::size_t user_index,
                           double rho, double share, double interfering_share) {
  const UserLink& user = scenario.users[user_index - 1];
  const double kappa2 = user.hw_impairment * user.hw_impairment;

  SindrCoefficients c;
  c.a = share * rho;
  c.b = rho * (interfering_share + kappa2);
  c.sigma_total = user.awgn_var + rho * (1.0 + kappa2) * user.csi_error_var;
  const double m0 = user.fading.shape;
  c.signal_gamma = {m0, estimate_mean_power(user, scenario.estimate_power) / m0};
  c.interf_gammas = interference_gammas(scenario, user_index);
  return c;
}

}  // namespace

double db_to_linear(double value_db) {
  if (!std::isfinite(value_db)) throw DomainError("dB value must be finite");
  return std::pow(10.0, value_db / 10.0);
}

double linear_to_db(double value) {
  if (!(value > 0.0)) throw DomainError("linear value must be positive");
  return 10.0 * std::log10(value);
}

void AntennaPattern::validate() const {
  require(std::isfinite(main_gain) && std::isfinite(side_gain),
          "antenna gains must be finite");
  require(side_gain > 0.0, "antenna side_gain must be positive");
  require(main_gain > side_gain, "antenna main_gain must exceed side_gain");
  require(beamwidth > 0.0 && beamwidth < kPi,
          "antenna beamwidth must lie in (0, pi)");
}

double antenna_gain(double theta, const AntennaPattern& pattern) {
  if (!(theta >= -kPi && theta <= kPi)) {
    throw DomainError("antenna angle outside [-pi, pi]");
  }
  return std::abs(theta) <= pattern.beamwidth ? pattern.main_gain
                                              : pattern.side_gain;
}

void FadingProfile::validate() const {
  require(std::isfinite(shape) && shape >= 0.5,
          "fading shape must be >= 0.5");
  require(finite_positive(mean_power), "fading mean_power must be positive");
  require(finite_positive(path_loss_exp),
          "fading path_loss_exp must be positive");
}

void UserLink::validate() const {
  require(finite_positive(distance), "user distance must be positive");
  fading.validate();
  require(finite_non_negative(csi_error_var),
          "user csi_error_var must be non-negative");
  require(finite_positive(awgn_var), "user awgn_var must be positive");
  require(finite_non_negative(hw_impairment),
          "user hw_impairment must be non-negative");
}

void Interferer::validate() const {
  require(finite_positive(distance), "interferer distance must be positive");
  require(finite_non_negative(tx_power),
          "interferer tx_power must be non-negative");
  fading.validate();
  require(finite_non_negative(hw_impairment),
          "interferer hw_impairment must be non-negative");
  require(ring_index >= 1, "interferer ring_index must be >= 1");
  require(std::isfinite(polar_angle), "interferer polar_angle must be finite");
  if (side_gain) {
    require(finite_positive(*side_gain),
            "interferer side_gain must be positive");
  }
}

void NomaAllocation::validate() const {
  require(!alphas.empty(), "allocation needs at least one user");
  require(sic_residuals.size() == alphas.size(),
          "sic_residuals must have one entry per user");
  double total = 0.0;
  for (std::size_t n = 0; n < alphas.size(); ++n) {
    require(std::isfinite(alphas[n]) && alphas[n] > 0.0,
            "power allocation coefficients must be positive");
    if (n > 0) {
      require(alphas[n - 1] > alphas[n],
              "power allocation coefficients must be strictly decreasing");
    }
    total += alphas[n];
  }
  require(std::abs(total - 1.0) <= 1e-12,
          "power allocation coefficients must sum to 1");
  for (double xi : sic_residuals) {
    require(xi >= 0.0 && xi <= 1.0, "SIC residuals must lie in [0, 1]");
  }
}

void Scenario::validate() const {
  require(finite_positive(tx_power), "tx_power must be positive");
  antenna.validate();
  allocation.validate();
  require(users.size() == allocation.size(),
          "users list length must equal allocation length");
  require(clusters.empty() || clusters.size() == users.size(),
          "clusters must be empty or hold one list per user");
  for (const UserLink& u : users) u.validate();
  for (const auto& cluster : clusters) {
    for (const Interferer& k : cluster) k.validate();
  }
}

void SindrCoefficients::validate() const {
  require(std::isfinite(a) && a > 0.0, "coefficient a must be positive");
  require(finite_non_negative(b), "coefficient b must be non-negative");
  require(finite_positive(sigma_total), "sigma_total must be positive");
  auto check = [](const GammaParams& g) {
    require(std::isfinite(g.shape) && g.shape >= 0.5,
            "gamma shape must be >= 0.5");
    require(finite_positive(g.scale), "gamma scale must be positive");
  };
  check(signal_gamma);
  for (const GammaParams& g : interf_gammas) check(g);
}

PsiTerms compute_psi(std::size_t message_index,
                     const NomaAllocation& allocation) {
  const std::size_t n = allocation.size();
  if (message_index < 1 || message_index > n) {
    throw DomainError("message index " + std::to_string(message_index) +
                      " outside [1, " + std::to_string(n) + "]");
  }
  PsiTerms out;
  for (std::size_t t = message_index; t < n; ++t) out.psi += allocation.alphas[t];
  for (std::size_t l = 0; l + 1 < message_index; ++l) {
    out.psi_tilde += allocation.sic_residuals[l] * allocation.alphas[l];
  }
  return out;
}

double link_gain(const Scenario& scenario, std::size_t user_index) {
  check_user_index(scenario, user_index);
  const UserLink& user = scenario.users[user_index - 1];
  const double gm = scenario.antenna.main_gain;
  return scenario.tx_power * gm * gm *
         std::pow(user.distance, -user.fading.path_loss_exp);
}

SindrCoefficients build_sindr_coefficients(const Scenario& scenario,
                                           std::size_t user_index,
                                           std::size_t message_index) {
  check_user_index(scenario, user_index);
  if (message_index < 1 || message_index > user_index) {
    throw DomainError("message index must satisfy 1 <= j <= i");
  }
  const PsiTerms psi = compute_psi(message_index, scenario.allocation);
  return assemble(scenario, user_index, link_gain(scenario, user_index),
                  scenario.allocation.alphas[message_index - 1],
                  psi.psi + psi.psi_tilde);
}

double OmaCoefficients::threshold(double noma_threshold) const {
  return std::pow(1.0 + noma_threshold, slot_count) - 1.0;
}

OmaCoefficients build_oma_coefficients(const Scenario& scenario,
                                       std::size_t user_index) {
  check_user_index(scenario, user_index);
  double rho = link_gain(scenario, user_index);
  if (scenario.oma_power == OmaPower::allocated) {
    rho *= scenario.allocation.alphas[user_index - 1];
  }
  OmaCoefficients out;
  out.coeffs = assemble(scenario, user_index, rho, 1.0, 0.0);
  out.slot_count = static_cast<int>(scenario.user_count());
  return out;
}

double rate_to_threshold(double rate_bits) {
  return std::exp2(rate_bits) - 1.0;
}

std::vector<RingSlot> place_interferers(int count, double cluster_radius,
                                        int per_orbit) {
  if (count < 0) throw DomainError("interferer count must be >= 0");
  if (!(cluster_radius > 0.0)) throw DomainError("cluster radius must be > 0");
  if (per_orbit < 1) throw DomainError("interferers per orbit must be >= 1");

  std::vector<RingSlot> out;
  if (count == 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  const int rings = (count + per_orbit - 1) / per_orbit;
  const double step = 2.0 * kPi / per_orbit;
  for (int k = 0; k < count; ++k) {
    const int ring = k / per_orbit + 1;
    const int slot = k % per_orbit;
    double angle = std::fmod(slot * step + ring * (kPi / per_orbit), 2.0 * kPi);
    out.push_back({ring, ring * cluster_radius / rings, angle});
  }
  return out;
}

}  // namespace noma
