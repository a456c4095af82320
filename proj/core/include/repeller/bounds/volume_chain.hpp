#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace repeller::bounds {

/// Measured volume of the Q-cylinders visiting the degenerate branch t times
/// for l steps in total.
struct MeasuredCell {
  int l = 0, t = 0;
  double volume = 0.0;
  double volume_hi = 0.0;
  std::size_t words = 0;
};

struct ChainRow {
  int l = 0, t = 0;
  double volume_hi = 0.0;
  bool admissible = false;
  std::string skip_reason;
  double log_measured = 0.0;
  /// (13/32) mu l + (n-l) log 2 + (n-l) log(eta/sigma^2) - (61/32) mu l.
  double intermediate = 0.0;
  double final_bound = 0.0;  // -mu n / 4
  bool intermediate_pass = false;
  bool final_pass = false;
  bool lemma_pass = false;
};

struct ChainReport {
  double mu = 0.0, sigma = 0.0;
  int n = 0, eta = 0;
  bool eta_ok = false;  // eta <= 1000 sigma^2
  std::vector<ChainRow> rows;
  double total_volume = 0.0;
  double delta = 0.0;
  double count_factor = 0.0;  // mu / (-4 log mu) n^2
  bool sum_pass = false;      // total <= e^(-mu n / 4)
  bool delta_pass = false;    // total <= delta(n, mu)
  bool rows_pass() const;
  bool pass() const { return eta_ok && sum_pass && delta_pass && rows_pass(); }
};

ChainReport volume_chain_check(double mu, double sigma, int eta, int n, std::span<const MeasuredCell> cells);

}  // namespace repeller::bounds
