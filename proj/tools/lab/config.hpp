#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace repeller::lab {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` text. `#` starts a comment; `include = path` splices
/// another file (relative to the including file) at that point, and later
/// assignments override earlier ones.
class Config {
 public:
  static Config load(const std::filesystem::path& path);
  static Config parse(const std::string& text, const std::filesystem::path& base_dir = ".");

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key, long fallback) const;
  /// Comma-separated numbers; an empty value is an empty list.
  std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback) const;

  /// Fully resolved config, one `key = value` per line in key order.
  std::string resolved() const;
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

 private:
  void parse_into(const std::string& text, const std::filesystem::path& base_dir, int depth);
  std::map<std::string, std::string> values_;
};

/// The parameter grid of a sweep: `mu_grid = a, b, c`, or mu_start / mu_stop /
/// mu_count / mu_spacing (linear or log), or a single `mu`. Sorted ascending.
std::vector<double> mu_grid(const Config& cfg, const std::vector<double>& fallback);

}  // namespace repeller::lab
