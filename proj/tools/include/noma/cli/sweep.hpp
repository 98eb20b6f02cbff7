#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noma/analytic.hpp"
#include "noma/model.hpp"

namespace noma::cli {

enum class Method { analytic, mc, oracle };

std::string_view to_string(Scheme scheme);
std::string_view to_string(Method method);
Scheme parse_scheme(std::string_view text);
Method parse_method(std::string_view text);

struct SweepRow {
  double snr_db = 0.0;
  std::size_t user = 1;
  Scheme scheme = Scheme::noma;
  Method method = Method::analytic;
  std::optional<double> p_out;  // empty when the method could not run
  std::optional<double> std_error;
  std::optional<std::uint64_t> trials;
  std::string error;
};

struct SweepConfig {
  std::vector<double> snr_grid_db;
  std::vector<std::size_t> users;  // empty: all users
  std::vector<Scheme> schemes{Scheme::noma, Scheme::oma};
  std::vector<Method> methods{Method::analytic};
  double threshold = 1.9952623149688795;  // 3 dB
  std::uint64_t trials = 1'000'000;
  std::uint64_t oracle_samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

/// "start:stop:step" (inclusive, dB) or a single value.
std::vector<double> parse_snr_grid(std::string_view text);

/// One row per (snr, user, scheme, method), in that nesting order, with
/// methods in the order analytic, mc, oracle. The transmit SNR sets P with
/// the noise variance of each user taken as given (unit in the presets).
std::vector<SweepRow> run_sweep(const Scenario& scenario,
                                const SweepConfig& config);

/// Header snr_db,user,scheme,method,p_out,stderr,trials; reals with 17
/// significant digits; LF line endings. Rows that failed print `NA`.
std::string format_csv(const std::vector<SweepRow>& rows);
void emit_csv(const std::vector<SweepRow>& rows,
              const std::filesystem::path& path);

}  // namespace noma::cli
