#pragma once

// Physical-layer description of a NOMA mmWave D2D downlink and its mapping
// onto the canonical SINDR form
//
//     gamma = a X / (b X + Y + Sigma),   X ~ Gamma(m0, beta0),
//     Y = sum_k Y_k,                     Y_k ~ Gamma(m_k, beta_k).
//
// User and message indices are 1-based throughout, matching the decoding
// order U_1 (largest power share) .. U_N.

#include <cstddef>
#include <optional>
#include <vector>

namespace noma {

inline constexpr double kPi = 3.14159265358979323846;

/// 10^(value_db / 10).
double db_to_linear(double value_db);
double linear_to_db(double value);

/// Two-level sectored gain model: main_gain inside |theta| <= beamwidth,
/// side_gain elsewhere. Gains are linear power gains.
struct AntennaPattern {
  double main_gain = 1.0;
  double side_gain = 0.5;
  double beamwidth = kPi / 6.0;

  void validate() const;
};

/// Gain seen at angle theta from boresight, theta in [-pi, pi].
double antenna_gain(double theta, const AntennaPattern& pattern);

/// Nakagami-m fading. Channel power is Gamma(shape, mean_power / shape).
struct FadingProfile {
  double shape = 1.0;
  double mean_power = 1.0;
  double path_loss_exp = 2.0;
  bool los = true;

  void validate() const;
  double gamma_scale() const { return mean_power / shape; }
};

struct UserLink {
  double distance = 1.0;       // meters
  FadingProfile fading;
  double csi_error_var = 0.0;  // sigma_eps^2
  double awgn_var = 1.0;       // sigma_i^2
  double hw_impairment = 0.0;  // kappa_i

  void validate() const;
};

struct Interferer {
  double distance = 1.0;  // meters, to the victim at the cluster origin
  double tx_power = 1.0;  // I_k, linear
  FadingProfile fading;
  double hw_impairment = 0.0;  // kappa_bar_k
  int ring_index = 1;
  double polar_angle = 0.0;
  /// Per-interferer side-lobe gain; falls back to the scenario pattern.
  std::optional<double> side_gain;

  void validate() const;
};

struct NomaAllocation {
  std::vector<double> alphas;         // strictly decreasing, sums to 1
  std::vector<double> sic_residuals;  // xi_l in [0, 1], one per user

  std::size_t size() const { return alphas.size(); }
  void validate() const;
};

/// What the receiver treats as the mean power of its channel estimate.
enum class EstimatePower {
  unit,             // E|h~|^2 = Omega
  one_minus_error,  // E|h~|^2 = Omega - sigma_eps^2
};

/// Transmit power granted to a user's exclusive slot in the OMA benchmark.
enum class OmaPower {
  allocated,  // alpha_i P, the same share the user gets under NOMA
  full,       // P
};

struct Scenario {
  double tx_power = 1.0;  // P, linear
  AntennaPattern antenna;
  NomaAllocation allocation;
  std::vector<UserLink> users;
  std::vector<std::vector<Interferer>> clusters;  // one list per user
  EstimatePower estimate_power = EstimatePower::unit;
  OmaPower oma_power = OmaPower::allocated;

  std::size_t user_count() const { return users.size(); }
  void validate() const;
};

struct GammaParams {
  double shape = 1.0;
  double scale = 1.0;

  double mean() const { return shape * scale; }
  friend bool operator==(const GammaParams&, const GammaParams&) = default;
};

/// Canonical coefficients consumed by every outage evaluator.
struct SindrCoefficients {
  double a = 1.0;
  double b = 0.0;
  double sigma_total = 1.0;
  GammaParams signal_gamma;
  std::vector<GammaParams> interf_gammas;

  void validate() const;
};

struct PsiTerms {
  double psi = 0.0;        // power of messages decoded after j
  double psi_tilde = 0.0;  // SIC residue of messages decoded before j
};

PsiTerms compute_psi(std::size_t message_index, const NomaAllocation& allocation);

/// Received-power scale rho_i = P G_m^2 d_i^-tau_i of user i.
double link_gain(const Scenario& scenario, std::size_t user_index);

/// Coefficients for user i decoding message j (1 <= j <= i <= N).
SindrCoefficients build_sindr_coefficients(const Scenario& scenario,
                                           std::size_t user_index,
                                           std::size_t message_index);

struct OmaCoefficients {
  SindrCoefficients coeffs;
  /// Maps the NOMA threshold v to the OMA one.
  int slot_count = 1;

  /// (1 + v)^N - 1: rate demand N R in a 1/N share of the resource.
  double threshold(double noma_threshold) const;
};

OmaCoefficients build_oma_coefficients(const Scenario& scenario,
                                       std::size_t user_index);

/// Rate threshold to SINDR threshold, v = 2^R - 1.
double rate_to_threshold(double rate_bits);

/// One interferer slot on the cluster layout.
struct RingSlot {
  int ring_index = 1;
  double radius = 0.0;
  double polar_angle = 0.0;
};

/// Rings c = 1..C with C = ceil(K / M), radius c R / C, filled inner-first
/// with up to M per ring. Slot k of ring c sits at 2 pi k / M + c pi / M.
std::vector<RingSlot> place_interferers(int count, double cluster_radius,
                                        int per_orbit);

}  // namespace noma
