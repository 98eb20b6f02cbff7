#include "noma/scenario_json.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "noma/error.hpp"

namespace noma {
namespace {

using nlohmann::json;

// Cursor over a JSON object that tracks its path and which keys were used.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path)
      : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ParseError(path_or_root(), "expected object");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    for (const auto& [key, value] : node_.items()) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) throw ParseError(child(key), "unknown key");
    }
  }

  bool has(const char* key) const { return node_.contains(key); }

  const json& at(const char* key) const {
    if (!node_.contains(key)) throw ParseError(child(key), "missing required key");
    return node_.at(key);
  }

  double number(const char* key) const {
    const json& v = at(key);
    if (!v.is_number()) throw ParseError(child(key), "expected number");
    return v.get<double>();
  }

  double number_or(const char* key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  int integer_or(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_integer()) throw ParseError(child(key), "expected integer");
    return v.get<int>();
  }

  bool boolean_or(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_boolean()) throw ParseError(child(key), "expected boolean");
    return v.get<bool>();
  }

  std::string string_or(const char* key, std::string fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_string()) throw ParseError(child(key), "expected string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const char* key) const {
    const json& v = at(key);
    if (!v.is_array()) throw ParseError(child(key), "expected array");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) {
        throw ParseError(child(key) + "/" + std::to_string(i), "expected number");
      }
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  std::string child(const std::string& key) const { return path_ + "/" + key; }

 private:
  std::string path_or_root() const { return path_.empty() ? "/" : path_; }

  const json& node_;
  std::string path_;
};

FadingProfile read_fading(const json& node, const std::string& path) {
  ObjectReader r(node, path);
  r.allow_only({"shape", "mean_power", "path_loss_exp", "los"});
  FadingProfile f;
  f.shape = r.number("shape");
  f.mean_power = r.number_or("mean_power", 1.0);
  f.path_loss_exp = r.number("path_loss_exp");
  f.los = r.boolean_or("los", true);
  return f;
}

UserLink read_user(const json& node, const std::string& path) {
  ObjectReader r(node, path);
  r.allow_only({"distance", "fading", "csi_error_var", "awgn_var",
                "hw_impairment"});
  UserLink u;
  u.distance = r.number("distance");
  u.fading = read_fading(r.at("fading"), r.child("fading"));
  u.csi_error_var = r.number_or("csi_error_var", 0.0);
  u.awgn_var = r.number_or("awgn_var", 1.0);
  u.hw_impairment = r.number_or("hw_impairment", 0.0);
  return u;
}

Interferer read_interferer(const json& node, const std::string& path) {
  ObjectReader r(node, path);
  r.allow_only({"distance", "tx_power_db", "fading", "hw_impairment",
                "ring_index", "polar_angle", "side_gain_db"});
  Interferer k;
  k.distance = r.number("distance");
  k.tx_power = db_to_linear(r.number("tx_power_db"));
  k.fading = read_fading(r.at("fading"), r.child("fading"));
  k.hw_impairment = r.number_or("hw_impairment", 0.0);
  k.ring_index = r.integer_or("ring_index", 1);
  k.polar_angle = r.number_or("polar_angle", 0.0);
  if (r.has("side_gain_db")) k.side_gain = db_to_linear(r.number("side_gain_db"));
  return k;
}

const json& array_at(const ObjectReader& r, const char* key) {
  const json& v = r.at(key);
  if (!v.is_array()) throw ParseError(r.child(key), "expected array");
  return v;
}

json fading_to_json(const FadingProfile& f) {
  return {{"shape", f.shape},
          {"mean_power", f.mean_power},
          {"path_loss_exp", f.path_loss_exp},
          {"los", f.los}};
}

}  // namespace

Scenario scenario_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("/", std::string("malformed JSON: ") + e.what());
  }

  ObjectReader root(doc, "");
  root.allow_only({"tx_power_db", "antenna", "allocation", "users", "clusters",
                   "estimate_power", "oma_power"});

  Scenario s;
  s.tx_power = db_to_linear(root.number("tx_power_db"));

  {
    ObjectReader a(root.at("antenna"), "/antenna");
    a.allow_only({"main_gain_db", "side_gain_db", "beamwidth"});
    s.antenna.main_gain = db_to_linear(a.number("main_gain_db"));
    s.antenna.side_gain = db_to_linear(a.number("side_gain_db"));
    s.antenna.beamwidth = a.number_or("beamwidth", kPi / 6.0);
  }
  {
    ObjectReader a(root.at("allocation"), "/allocation");
    a.allow_only({"alphas", "sic_residuals"});
    s.allocation.alphas = a.numbers("alphas");
    s.allocation.sic_residuals =
        a.has("sic_residuals") ? a.numbers("sic_residuals")
                               : std::vector<double>(s.allocation.alphas.size(), 0.0);
  }

  const json& users = array_at(root, "users");
  for (std::size_t i = 0; i < users.size(); ++i) {
    s.users.push_back(read_user(users[i], "/users/" + std::to_string(i)));
  }

  if (root.has("clusters")) {
    const json& clusters = array_at(root, "clusters");
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const std::string path = "/clusters/" + std::to_string(i);
      if (!clusters[i].is_array()) throw ParseError(path, "expected array");
      std::vector<Interferer> cluster;
      for (std::size_t k = 0; k < clusters[i].size(); ++k) {
        cluster.push_back(
            read_interferer(clusters[i][k], path + "/" + std::to_string(k)));
      }
      s.clusters.push_back(std::move(cluster));
    }
  }

  const std::string estimate = root.string_or("estimate_power", "unit");
  if (estimate == "unit") {
    s.estimate_power = EstimatePower::unit;
  } else if (estimate == "one_minus_error") {
    s.estimate_power = EstimatePower::one_minus_error;
  } else {
    throw ParseError("/estimate_power", "expected \"unit\" or \"one_minus_error\"");
  }

  const std::string oma = root.string_or("oma_power", "allocated");
  if (oma == "allocated") {
    s.oma_power = OmaPower::allocated;
  } else if (oma == "full") {
    s.oma_power = OmaPower::full;
  } else {
    throw ParseError("/oma_power", "expected \"allocated\" or \"full\"");
  }

  s.validate();
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read " + path.string() + ": " + std::strerror(errno));
  }
  return scenario_from_json(buf.str());
}

std::string scenario_to_json(const Scenario& s, int indent) {
  json doc;
  doc["tx_power_db"] = linear_to_db(s.tx_power);
  doc["antenna"] = {{"main_gain_db", linear_to_db(s.antenna.main_gain)},
                    {"side_gain_db", linear_to_db(s.antenna.side_gain)},
                    {"beamwidth", s.antenna.beamwidth}};
  doc["allocation"] = {{"alphas", s.allocation.alphas},
                       {"sic_residuals", s.allocation.sic_residuals}};
  json users = json::array();
  for (const UserLink& u : s.users) {
    users.push_back({{"distance", u.distance},
                     {"fading", fading_to_json(u.fading)},
                     {"csi_error_var", u.csi_error_var},
                     {"awgn_var", u.awgn_var},
                     {"hw_impairment", u.hw_impairment}});
  }
  doc["users"] = std::move(users);
  json clusters = json::array();
  for (const auto& cluster : s.clusters) {
    json list = json::array();
    for (const Interferer& k : cluster) {
      json item = {{"distance", k.distance},
                   {"tx_power_db", linear_to_db(k.tx_power)},
                   {"fading", fading_to_json(k.fading)},
                   {"hw_impairment", k.hw_impairment},
                   {"ring_index", k.ring_index},
                   {"polar_angle", k.polar_angle}};
      if (k.side_gain) item["side_gain_db"] = linear_to_db(*k.side_gain);
      list.push_back(std::move(item));
    }
    clusters.push_back(std::move(list));
  }
  doc["clusters"] = std::move(clusters);
  doc["estimate_power"] =
      s.estimate_power == EstimatePower::unit ? "unit" : "one_minus_error";
  doc["oma_power"] = s.oma_power == OmaPower::allocated ? "allocated" : "full";
  return doc.dump(indent);
}

}  // namespace noma
