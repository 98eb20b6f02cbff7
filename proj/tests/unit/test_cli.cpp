#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "noma/analytic.hpp"
#include "noma/cli/presets.hpp"
#include "noma/cli/sweep.hpp"
#include "noma/error.hpp"

using namespace noma;
using namespace noma::cli;

namespace {

std::filesystem::path temp_dir() {
  const char* dir = std::getenv("NOMA_TEST_TMPDIR");
  return dir ? std::filesystem::path(dir) : std::filesystem::temp_directory_path();
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("fig2-ideal preset parameters") {
  const Scenario s = make_fig2_ideal();
  CHECK(s.tx_power == doctest::Approx(1000.0).epsilon(1e-15));
  CHECK(s.antenna.main_gain == doctest::Approx(15.848931924611135).epsilon(1e-15));
  CHECK(s.antenna.side_gain == doctest::Approx(0.77460447207815878).epsilon(1e-15));
  CHECK(s.antenna.beamwidth == doctest::Approx(kPi / 6));
  CHECK(s.allocation.alphas == std::vector<double>{0.8, 0.2});
  REQUIRE(s.users.size() == 2);
  CHECK(s.users[0].distance == 100.0);
  CHECK(s.users[1].distance == 50.0);
  for (const UserLink& u : s.users) {
    CHECK(u.fading.shape == 4.0);
    CHECK(u.fading.path_loss_exp == 2.0);
    CHECK(u.awgn_var == 1.0);
    CHECK(u.csi_error_var == 0.0);
  }
  REQUIRE(s.clusters.size() == 2);
  for (const auto& cluster : s.clusters) {
    REQUIRE(cluster.size() == 8);
    for (const Interferer& k : cluster) {
      CHECK(k.distance == doctest::Approx(30.0));
      CHECK(k.tx_power == doctest::Approx(db_to_linear(15.0)));
    }
  }
}

TEST_CASE("preset overrides") {
  ScenarioOverrides o;
  o.hw_impairment = 0.15;
  o.csi_error_var = 0.02;
  o.sic_residual = 0.005;
  const Scenario s = load_scenario("fig3-u2", o);
  CHECK(s.clusters[1].size() == 24);
  CHECK(s.users[1].hw_impairment == 0.15);
  CHECK(s.clusters[0][3].hw_impairment == 0.15);
  CHECK(s.users[0].csi_error_var == 0.02);
  CHECK(s.allocation.sic_residuals[0] == 0.005);
  CHECK(preset_default_users("fig3-u2", s) == std::vector<std::size_t>{2});
  CHECK(preset_default_users("fig2-ideal", s) == std::vector<std::size_t>{1, 2});

  o = {};
  o.interferers = 0;
  CHECK(load_scenario("fig2-ideal", o).clusters[0].empty());
  CHECK(fig3_impairment_grid().size() == 18);
}

TEST_CASE("parse_snr_grid") {
  CHECK(parse_snr_grid("0:50:5").size() == 11);
  CHECK(parse_snr_grid("0:50:5").back() == 50.0);
  CHECK(parse_snr_grid("0:1:0.1").size() == 11);
  CHECK(parse_snr_grid("12.5") == std::vector<double>{12.5});
  CHECK_THROWS_AS(parse_snr_grid("10:0:5"), ValidationError);
  CHECK_THROWS_AS(parse_snr_grid("0:10:0"), ValidationError);
  CHECK_THROWS_AS(parse_snr_grid("0:10"), ValidationError);
  CHECK_THROWS_AS(parse_snr_grid("abc"), ValidationError);
}

TEST_CASE("sweep row layout and values") {
  SweepConfig cfg;
  cfg.snr_grid_db = parse_snr_grid("0:50:5");
  cfg.methods = {Method::mc, Method::analytic};
  cfg.trials = 1000;
  const Scenario s = make_fig2_ideal();
  const auto rows = run_sweep(s, cfg);
  REQUIRE(rows.size() == 88);
  CHECK(rows[0].snr_db == 0.0);
  CHECK(rows[0].user == 1);
  CHECK(rows[0].scheme == Scheme::noma);
  CHECK(rows[0].method == Method::analytic);
  CHECK(rows[1].method == Method::mc);
  CHECK(rows[2].scheme == Scheme::oma);
  CHECK(rows[4].user == 2);
  CHECK(rows[8].snr_db == 5.0);

  Scenario at30 = s;
  at30.tx_power = 1000.0;
  const auto& r = rows[6 * 8 + 4];
  CHECK(r.snr_db == 30.0);
  CHECK(r.user == 2);
  CHECK(*r.p_out == outage_for_user(at30, 2, cfg.threshold, Scheme::noma));
  CHECK(!r.std_error);
  CHECK(*rows[6 * 8 + 5].trials == 1000);
}

TEST_CASE("CSV formatting") {
  CHECK(format_csv({}) == "snr_db,user,scheme,method,p_out,stderr,trials\n");
  SweepRow a{30.0, 2, Scheme::noma, Method::analytic, 0.0013419731843288263, {}, {}, {}};
  SweepRow m{30.0, 2, Scheme::oma, Method::mc, 0.25, 0.0125, 1000, {}};
  SweepRow na{0.0, 1, Scheme::noma, Method::analytic, {}, {}, {}, "unsupported"};
  CHECK(format_csv({a, m, na}) ==
        "snr_db,user,scheme,method,p_out,stderr,trials\n"
        "30,2,NOMA,analytic,0.0013419731843288263,,\n"
        "30,2,OMA,mc,0.25,0.012500000000000001,1000\n"
        "0,1,NOMA,analytic,NA,,\n");
}

TEST_CASE("unsupported analytic points become NA") {
  Scenario s = make_fig2_ideal();
  s.users[1].fading.shape = 2.5;
  SweepConfig cfg;
  cfg.snr_grid_db = {30.0};
  cfg.users = {2};
  cfg.schemes = {Scheme::noma};
  cfg.methods = {Method::analytic, Method::oracle};
  cfg.oracle_samples = 2000;
  const auto rows = run_sweep(s, cfg);
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].p_out);
  CHECK(!rows[0].error.empty());
  CHECK(rows[1].p_out);
  CHECK(format_csv(rows).find(",NA,") != std::string::npos);
}

TEST_CASE("sweep validation") {
  SweepConfig cfg;
  const Scenario s = make_fig2_ideal();
  CHECK_THROWS_AS(run_sweep(s, cfg), ValidationError);
  cfg.snr_grid_db = {10.0};
  cfg.users = {3};
  CHECK_THROWS_AS(run_sweep(s, cfg), ValidationError);
  CHECK_THROWS_AS(parse_method("quantum"), ValidationError);
  CHECK_THROWS_AS(parse_scheme("cdma"), ValidationError);
  CHECK(parse_scheme("oma") == Scheme::oma);
}

TEST_CASE("fig3 worst impairments declare an outage for U2") {
  ScenarioOverrides o;
  o.hw_impairment = 0.3;
  o.csi_error_var = 0.2;
  for (double xi : {0.0, 0.005}) {
    o.sic_residual = xi;
    const Scenario s = load_scenario("fig3-u2", o);
    SweepConfig cfg;
    cfg.snr_grid_db = parse_snr_grid("0:50:5");
    cfg.users = {2};
    for (const SweepRow& r : run_sweep(s, cfg)) CHECK(*r.p_out >= 0.99);
  }
}

TEST_CASE("CSV is byte-identical across worker counts") {
  SweepConfig cfg;
  cfg.snr_grid_db = parse_snr_grid("0:40:20");
  cfg.methods = {Method::analytic, Method::mc, Method::oracle};
  cfg.trials = 20'000;
  cfg.oracle_samples = 20'000;
  cfg.seed = 77;
  const Scenario s = make_fig2_ideal();
  cfg.workers = 1;
  const std::string one = format_csv(run_sweep(s, cfg));
  cfg.workers = 4;
  const std::string four = format_csv(run_sweep(s, cfg));
  CHECK(one == four);
  CHECK(count_lines(one) == 1 + 3 * 2 * 2 * 3);
}

TEST_CASE("emit_csv writes the file and reports I/O failures") {
  const auto path = temp_dir() / "cli_emit.csv";
  SweepRow a{30.0, 2, Scheme::noma, Method::analytic, 0.5, {}, {}, {}};
  emit_csv({a}, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == format_csv({a}));
  CHECK_THROWS_AS(emit_csv({a}, temp_dir() / "missing_dir" / "x.csv"), IoError);
}

TEST_CASE("--k is rejected for scenario files") {
  ScenarioOverrides o;
  o.interferers = 4;
  CHECK_THROWS_AS(load_scenario("/nonexistent.json", o), ValidationError);
  CHECK_THROWS_AS(load_scenario("/nonexistent.json"), IoError);
}
