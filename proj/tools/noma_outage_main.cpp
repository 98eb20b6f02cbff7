// noma-outage: transmit-SNR sweeps of NOMA/OMA outage probability.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "noma/cli/presets.hpp"
#include "noma/cli/sweep.hpp"
#include "noma/error.hpp"
#include "noma/model.hpp"
#include "noma/scenario_json.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = noma::cli;

  CLI::App app{"Outage probability of a NOMA mmWave D2D downlink with "
               "hardware, CSI and SIC imperfections"};

  std::string preset;
  std::string scenario_path;
  std::string snr = "0:50:5";
  std::string users_text;
  std::string schemes_text = "noma,oma";
  std::string methods_text = "analytic";
  std::uint64_t trials = 1'000'000;
  std::uint64_t oracle_samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  double threshold_db = cli::kPresetThresholdDb;
  std::string out_path;
  std::optional<int> k;
  std::optional<double> kappa;
  std::optional<double> csi_var;
  std::optional<double> xi;
  std::string oma_power;
  bool dump = false;

  auto* source = app.add_option_group("source");
  source->add_option("--preset", preset, "Built-in scenario: fig2-ideal or fig3-u2")
      ->check(CLI::IsMember(cli::preset_names()));
  source->add_option("--scenario", scenario_path, "Scenario JSON document");
  source->require_option(1);

  app.add_option("--snr", snr, "Transmit SNR grid in dB, start:stop:step or one value")
      ->capture_default_str();
  app.add_option("--users", users_text, "Comma-separated 1-based users (default: preset's)");
  app.add_option("--schemes", schemes_text, "noma,oma")->capture_default_str();
  app.add_option("--methods", methods_text, "analytic,mc,oracle")->capture_default_str();
  app.add_option("--trials", trials, "Monte Carlo trials per point")->capture_default_str();
  app.add_option("--oracle-samples", oracle_samples, "Interference draws per oracle point")
      ->capture_default_str();
  app.add_option("--seed", seed, "Base seed shared by all stochastic methods")
      ->capture_default_str();
  app.add_option("--workers", workers, "Worker threads, 0 = all cores (results do not change)")
      ->capture_default_str();
  app.add_option("--threshold-db", threshold_db, "SINDR threshold v in dB")
      ->capture_default_str();
  app.add_option("--out", out_path, "CSV output path (default: stdout)");
  app.add_option("--k", k, "Interferers per user cluster (presets only)");
  app.add_option("--kappa", kappa, "Hardware impairment level for all links");
  app.add_option("--csi-var", csi_var, "Channel-estimation error variance");
  app.add_option("--xi", xi, "SIC residual for every cancelled message");
  app.add_option("--oma-power", oma_power, "OMA slot power: allocated or full")
      ->check(CLI::IsMember({"allocated", "full"}));
  app.add_flag("--dump-scenario", dump, "Print the resolved scenario as JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const std::string source_name = preset.empty() ? scenario_path : preset;
    noma::Scenario scenario = cli::load_scenario(source_name, {k, kappa, csi_var, xi});
    if (!oma_power.empty()) {
      scenario.oma_power =
          oma_power == "full" ? noma::OmaPower::full : noma::OmaPower::allocated;
    }

    if (dump) {
      std::cout << noma::scenario_to_json(scenario) << '\n';
      return 0;
    }

    cli::SweepConfig config;
    config.snr_grid_db = cli::parse_snr_grid(snr);
    if (users_text.empty()) {
      config.users = preset.empty()
                         ? std::vector<std::size_t>{}
                         : cli::preset_default_users(preset, scenario);
    } else {
      for (const auto& u : split_list(users_text)) {
        config.users.push_back(static_cast<std::size_t>(std::stoul(u)));
      }
    }
    config.schemes.clear();
    for (const auto& s : split_list(schemes_text)) config.schemes.push_back(cli::parse_scheme(s));
    config.methods.clear();
    for (const auto& m : split_list(methods_text)) config.methods.push_back(cli::parse_method(m));
    config.threshold = noma::db_to_linear(threshold_db);
    config.trials = trials;
    config.oracle_samples = oracle_samples;
    config.seed = seed;
    config.workers = workers;

    const auto rows = cli::run_sweep(scenario, config);
    if (out_path.empty()) {
      std::cout << cli::format_csv(rows);
    } else {
      cli::emit_csv(rows, out_path);
    }
    for (const auto& row : rows) {
      if (!row.error.empty()) {
        std::cerr << "warning: " << cli::to_string(row.method) << " at " << row.snr_db
                  << " dB, user " << row.user << ": " << row.error << '\n';
      }
    }
  } catch (const noma::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
