#pragma once

#include <cstddef>
#include <vector>

#include "repeller/holes/cylinder.hpp"

namespace repeller::holes {

struct ExpansionProfile {
  CylinderWord word;
  /// Certified per-step lower bounds max(floor, witness min - Lipschitz slack).
  std::vector<double> terms;
  /// phi_j: mean of the first j terms.
  std::vector<double> phi;
  /// expansion_floor of each symbol.
  std::vector<double> floors;
  /// Uncorrected minima of log ||Df^-1(f^(j-1) x)||^-1 over witnesses of the j-prefix.
  std::vector<double> raw_terms;
  std::vector<double> raw_phi;
  /// log sigma_min(Df^n x) >= n phi_n at every full-word witness.
  bool product_check = false;
  double worst_product_margin = 0.0;
  std::size_t witnesses = 0;
  bool empty = false;
};

/// log of the least singular value of Df^n(x), accumulated with renormalised
/// products so long orbits do not overflow.
double log_least_expansion(const MapWithHoles& map, const TorusPoint& x, int n);

/// Average least expansion along the word. Each step uses the witnesses of its
/// own prefix cylinder. An empty cylinder yields `empty` with no values.
ExpansionProfile phi_profile(const MapWithHoles& map, const CylinderWord& word, const RefineOptions& opts = {});

}  // namespace repeller::holes
