#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noma/model.hpp"

namespace noma::cli {

/// Parameters behind the built-in presets. Defaults reproduce the ideal
/// two-user setup; the fig3 preset starts from K = 24.
struct PresetParams {
  int interferers = 8;          // K per user cluster
  double hw_impairment = 0.0;   // kappa, shared by users and interferers
  double csi_error_var = 0.0;   // sigma_eps^2
  double sic_residual = 0.0;    // xi_l for every l < N
  double tx_power_db = 30.0;
  double cluster_radius = 30.0;  // R
  int per_orbit = 8;             // M
};

/// Overrides applied on top of a preset or a scenario file.
struct ScenarioOverrides {
  std::optional<int> interferers;  // presets only
  std::optional<double> hw_impairment;
  std::optional<double> csi_error_var;
  std::optional<double> sic_residual;
};

inline constexpr double kPresetThresholdDb = 3.0;
inline constexpr double kPresetMainGainDb = 12.0;
inline constexpr double kPresetSideGainDb = -1.1092;
inline constexpr double kPresetInterfererPowerDb = 15.0;

/// fig2-ideal: N = 2, alpha = (0.8, 0.2), d1 = 2 d2 = 100 m, m = 4, tau = 2,
/// sigma^2 = 1, each user at the centre of its own ring cluster.
Scenario make_fig2_ideal(const PresetParams& params = {});

/// fig3-u2: the same network with K = 24 unless overridden.
Scenario make_fig3_u2(PresetParams params = {});

bool is_preset_name(std::string_view name);
std::vector<std::string> preset_names();

/// Users plotted by default for a preset (fig3-u2 shows only U2).
std::vector<std::size_t> preset_default_users(std::string_view name,
                                              const Scenario& scenario);

/// A preset name or a path to a scenario JSON document.
Scenario load_scenario(const std::string& source,
                       const ScenarioOverrides& overrides = {});

/// The (kappa, sigma_eps^2, xi_1) grid of the impairment study.
struct ImpairmentPoint {
  double hw_impairment;
  double csi_error_var;
  double sic_residual;
};
std::vector<ImpairmentPoint> fig3_impairment_grid();

}  // namespace noma::cli
