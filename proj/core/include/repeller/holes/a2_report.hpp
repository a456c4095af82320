#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "repeller/holes/census.hpp"

namespace repeller::holes {

enum class A2Status { pass, fail, inconclusive, out_of_contract };
const char* to_string(A2Status s) noexcept;

struct A2Row {
  int n = 0;
  double mu = 0.0;
  double mu_f = 0.0;
  double threshold = 0.0;
  std::size_t kept = 0, pruned = 0;
  double vol_lo = 0.0, vol_hi = 0.0;
  double delta = 0.0;
  A2Status status = A2Status::inconclusive;
  bool truncated = false;
};

/// One census to depth n_max, rows for n in [n_min, n_max]. Rows with n < n0
/// are reported but marked out of contract.
std::vector<A2Row> a2_rows(const MapWithHoles& map, double c0, int n_min, int n_max, int n0,
                           const CensusOptions& opts = {});

/// Column schema n,mu,mu_f,threshold,kept,pruned,vol_lo,vol_hi,delta,pass.
void write_a2_csv(std::ostream& out, const std::vector<A2Row>& rows);
std::string a2_csv_header();

bool all_pass(const std::vector<A2Row>& rows);

}  // namespace repeller::holes
