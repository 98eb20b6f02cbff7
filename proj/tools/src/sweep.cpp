#include "noma/cli/sweep.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "noma/error.hpp"
#include "noma/montecarlo.hpp"
#include "noma/oracle.hpp"

namespace noma::cli {
namespace {

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ValidationError("invalid number '" + std::string(text) + "'");
  }
  return value;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::noma ? "NOMA" : "OMA";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::analytic: return "analytic";
    case Method::mc: return "mc";
    case Method::oracle: return "oracle";
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "noma" || text == "NOMA") return Scheme::noma;
  if (text == "oma" || text == "OMA") return Scheme::oma;
  throw ValidationError("unknown scheme '" + std::string(text) + "' (expected noma or oma)");
}

Method parse_method(std::string_view text) {
  if (text == "analytic") return Method::analytic;
  if (text == "mc") return Method::mc;
  if (text == "oracle") return Method::oracle;
  throw ValidationError("unknown method '" + std::string(text) +
                        "' (expected analytic, mc or oracle)");
}

std::vector<double> parse_snr_grid(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return {parse_double(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ValidationError("SNR grid must be 'start:stop:step' or a single value");
  }
  const double start = parse_double(text.substr(0, first));
  const double stop = parse_double(text.substr(first + 1, second - first - 1));
  const double step = parse_double(text.substr(second + 1));
  if (!(step > 0.0)) throw ValidationError("SNR grid step must be positive");
  if (stop < start) throw ValidationError("SNR grid stop must be >= start");
  const double span = (stop - start) / step;
  if (span > 1e6) throw ValidationError("SNR grid has too many points");
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

std::vector<SweepRow> run_sweep(const Scenario& base, const SweepConfig& config) {
  if (config.snr_grid_db.empty()) throw ValidationError("SNR grid is empty");
  base.validate();

  std::vector<std::size_t> users = config.users;
  if (users.empty()) {
    for (std::size_t i = 1; i <= base.user_count(); ++i) users.push_back(i);
  }
  users = sorted_unique(users);
  for (std::size_t u : users) {
    if (u < 1 || u > base.user_count()) {
      throw ValidationError("user " + std::to_string(u) + " not in scenario");
    }
  }
  const auto schemes = sorted_unique(config.schemes);
  const auto methods = sorted_unique(config.methods);
  const auto grid = sorted_unique(config.snr_grid_db);

  McConfig mc;
  mc.trials = config.trials;
  mc.seed = config.seed;
  mc.workers = config.workers;
  OracleConfig oc;
  oc.samples = config.oracle_samples;
  oc.seed = config.seed;
  oc.workers = config.workers;

  std::vector<SweepRow> rows;
  Scenario scenario = base;
  for (double snr : grid) {
    scenario.tx_power = db_to_linear(snr);
    for (std::size_t user : users) {
      for (Scheme scheme : schemes) {
        const OutageQuery q = make_user_query(scenario, user, config.threshold, scheme);
        for (Method method : methods) {
          SweepRow row{snr, user, scheme, method, {}, {}, {}, {}};
          try {
            switch (method) {
              case Method::analytic:
                row.p_out = outage_closed_form(q);
                break;
              case Method::mc: {
                const OutageEstimate e = estimate_outage(q.coeffs, q.threshold, mc);
                row.p_out = e.p_hat;
                row.std_error = e.std_error;
                row.trials = e.trials;
                break;
              }
              case Method::oracle: {
                const OracleEstimate e = outage_semi_analytic(q.coeffs, q.threshold, oc);
                row.p_out = e.p;
                row.std_error = e.std_error;
                row.trials = e.samples;
                break;
              }
            }
          } catch (const UnsupportedError& e) {
            row.error = e.what();
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out = "snr_db,user,scheme,method,p_out,stderr,trials\n";
  for (const SweepRow& r : rows) {
    out += format_real(r.snr_db);
    out += ',';
    out += std::to_string(r.user);
    out += ',';
    out += to_string(r.scheme);
    out += ',';
    out += to_string(r.method);
    out += ',';
    out += r.p_out ? format_real(*r.p_out) : std::string("NA");
    out += ',';
    if (r.std_error) out += format_real(*r.std_error);
    out += ',';
    if (r.trials) out += std::to_string(*r.trials);
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  const std::string text = format_csv(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing: " + std::strerror(errno));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string() + ": " + std::strerror(errno));
  }
}

}  // namespace noma::cli
