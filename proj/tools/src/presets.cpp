#include "noma/cli/presets.hpp"

#include "noma/error.hpp"
#include "noma/scenario_json.hpp"

namespace noma::cli {
namespace {

constexpr std::string_view kFig2 = "fig2-ideal";
constexpr std::string_view kFig3 = "fig3-u2";

FadingProfile los_profile() { return {4.0, 1.0, 2.0, true}; }

std::vector<Interferer> make_cluster(const PresetParams& p) {
  std::vector<Interferer> cluster;
  for (const RingSlot& slot : place_interferers(p.interferers, p.cluster_radius, p.per_orbit)) {
    Interferer k;
    k.distance = slot.radius;
    k.tx_power = db_to_linear(kPresetInterfererPowerDb);
    k.fading = los_profile();
    k.hw_impairment = p.hw_impairment;
    k.ring_index = slot.ring_index;
    k.polar_angle = slot.polar_angle;
    cluster.push_back(k);
  }
  return cluster;
}

void set_sic_residual(NomaAllocation& allocation, double xi) {
  for (std::size_t l = 0; l + 1 < allocation.sic_residuals.size(); ++l) {
    allocation.sic_residuals[l] = xi;
  }
}

}  // namespace

Scenario make_fig2_ideal(const PresetParams& p) {
  if (p.interferers < 0) throw ValidationError("interferer count must be >= 0");
  Scenario s;
  s.tx_power = db_to_linear(p.tx_power_db);
  s.antenna = {db_to_linear(kPresetMainGainDb), db_to_linear(kPresetSideGainDb), kPi / 6.0};
  s.allocation.alphas = {0.8, 0.2};
  s.allocation.sic_residuals = {0.0, 0.0};
  set_sic_residual(s.allocation, p.sic_residual);
  for (double distance : {100.0, 50.0}) {
    UserLink u;
    u.distance = distance;
    u.fading = los_profile();
    u.csi_error_var = p.csi_error_var;
    u.awgn_var = 1.0;
    u.hw_impairment = p.hw_impairment;
    s.users.push_back(u);
    s.clusters.push_back(make_cluster(p));
  }
  s.validate();
  return s;
}

Scenario make_fig3_u2(PresetParams p) { return make_fig2_ideal(p); }

bool is_preset_name(std::string_view name) { return name == kFig2 || name == kFig3; }

std::vector<std::string> preset_names() { return {std::string(kFig2), std::string(kFig3)}; }

std::vector<std::size_t> preset_default_users(std::string_view name,
                                              const Scenario& scenario) {
  if (name == kFig3) return {2};
  std::vector<std::size_t> users;
  for (std::size_t i = 1; i <= scenario.user_count(); ++i) users.push_back(i);
  return users;
}

Scenario load_scenario(const std::string& source, const ScenarioOverrides& o) {
  if (is_preset_name(source)) {
    PresetParams p;
    if (source == kFig3) p.interferers = 24;
    if (o.interferers) p.interferers = *o.interferers;
    if (o.hw_impairment) p.hw_impairment = *o.hw_impairment;
    if (o.csi_error_var) p.csi_error_var = *o.csi_error_var;
    if (o.sic_residual) p.sic_residual = *o.sic_residual;
    return source == kFig3 ? make_fig3_u2(p) : make_fig2_ideal(p);
  }

  if (o.interferers) {
    throw ValidationError("--k only applies to presets; edit the scenario clusters instead");
  }
  Scenario s = load_scenario_file(source);
  if (o.hw_impairment) {
    for (UserLink& u : s.users) u.hw_impairment = *o.hw_impairment;
    for (auto& cluster : s.clusters) {
      for (Interferer& k : cluster) k.hw_impairment = *o.hw_impairment;
    }
  }
  if (o.csi_error_var) {
    for (UserLink& u : s.users) u.csi_error_var = *o.csi_error_var;
  }
  if (o.sic_residual) set_sic_residual(s.allocation, *o.sic_residual);
  s.validate();
  return s;
}

std::vector<ImpairmentPoint> fig3_impairment_grid() {
  std::vector<ImpairmentPoint> grid;
  for (double kappa : {0.0, 0.15, 0.3}) {
    for (double csi : {0.0, 0.02, 0.2}) {
      for (double xi : {0.0, 0.005}) grid.push_back({kappa, csi, xi});
    }
  }
  return grid;
}

}  // namespace noma::cli
