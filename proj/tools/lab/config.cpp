#include "lab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace repeller::lab {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "family", "mu", "mu_grid", "mu_start", "mu_stop", "mu_count", "mu_spacing", "sigma", "delta0", "delta1",
      "sigma1", "trap_fraction", "seed", "horizon", "base", "level_min", "level_max", "samples_per_box",
      "tolerance", "max_doublings", "trap_samples", "census_samples", "max_kept", "cover_level", "n_min",
      "n_max", "n0", "n", "threshold", "verify_samples", "hole_samples", "patterns_n_max", "stirling_l_max",
      "entropy_l_max", "entropy_tau", "entropy_kappa_grid", "lemma_mu_grid", "lemma_outside_mu_grid",
      "lemma_l_max", "probe_tau", "probe_kappa", "probe_l_max", "delta_mu_grid", "delta_n_max", "lt_mu",
      "lt_l", "chain_mu", "chain_n", "row_sum_m_max"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Config c;
  c.parse_into(ss.str(), path.parent_path().empty() ? "." : path.parent_path(), 0);
  return c;
}

Config Config::parse(const std::string& text, const std::filesystem::path& base_dir) {
  Config c;
  c.parse_into(text, base_dir, 0);
  return c;
}

void Config::parse_into(const std::string& text, const std::filesystem::path& base_dir, int depth) {
  if (depth > 16) throw ConfigError("config includes nested too deeply");
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "include") {
      const std::filesystem::path p = base_dir / value;
      std::ifstream f(p);
      if (!f) throw ConfigError("cannot read included config '" + p.string() + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      parse_into(ss.str(), p.parent_path(), depth + 1);
      continue;
    }
    set(key, value);
  }
}

void Config::set(const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw ConfigError("unknown config key '" + key + "'");
  values_[key] = value;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size() || !std::isfinite(v)) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' is not a number: '" + it->second + "'");
  }
}

long Config::get_int(const std::string& key, long fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' is not an integer: '" + it->second + "'");
  }
}

std::vector<double> Config::get_doubles(const std::string& key, const std::vector<double>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("'" + key + "' has a non-numeric entry '" + item + "'");
    }
  }
  return out;
}

std::string Config::resolved() const {
  std::string s;
  for (const auto& [k, v] : values_) s += k + " = " + v + "\n";
  return s;
}

std::vector<double> mu_grid(const Config& cfg, const std::vector<double>& fallback) {
  std::vector<double> grid;
  if (cfg.has("mu_grid")) {
    grid = cfg.get_doubles("mu_grid", {});
  } else if (cfg.has("mu_start") || cfg.has("mu_stop") || cfg.has("mu_count")) {
    const double a = cfg.get_double("mu_start", 0.0), b = cfg.get_double("mu_stop", 0.0);
    const long count = cfg.get_int("mu_count", 0);
    const std::string spacing = cfg.get_string("mu_spacing", "linear");
    if (count < 0) throw ConfigError("mu_count must be >= 0");
    if (spacing != "linear" && spacing != "log") throw ConfigError("mu_spacing must be linear or log");
    if (spacing == "log" && (a <= 0.0 || b <= 0.0)) throw ConfigError("log spacing needs positive endpoints");
    for (long i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
      grid.push_back(spacing == "log" ? std::exp(std::log(a) + f * (std::log(b) - std::log(a))) : a + f * (b - a));
    }
  } else if (cfg.has("mu")) {
    grid.push_back(cfg.get_double("mu", 0.0));
  } else {
    grid = fallback;
  }
  for (double m : grid)
    if (!(m > -1.0 && m < 1.0)) throw ConfigError("mu values must lie in (-1, 1)");
  std::sort(grid.begin(), grid.end());
  return grid;
}

}  // namespace repeller::lab
