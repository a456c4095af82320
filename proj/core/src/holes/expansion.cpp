#include "repeller/holes/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace repeller::holes {

double log_least_expansion(const MapWithHoles& map, const TorusPoint& x, int n) {
  const int d = map.dimension();
  TorusPoint p = x;
  if (d == 1) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      s += map.log_conorm(p);
      p = map.forward(p);
    }
    return s;
  }
  Jacobian prod = Jacobian::Identity(d, d);
  double log_scale = 0.0, log_det = 0.0;
  for (int j = 0; j < n; ++j) {
    const Jacobian J = map.jacobian(p);
    log_det += std::log(std::abs(J.determinant()));
    prod = J * prod;
    const double norm = prod.norm();
    log_scale += std::log(norm);
    prod /= norm;
    p = map.forward(p);
  }
  Eigen::JacobiSVD<Jacobian> svd(prod);
  if (d == 2) return log_det - (log_scale + std::log(svd.singularValues()(0)));
  return log_scale + std::log(svd.singularValues().minCoeff());
}

ExpansionProfile phi_profile(const MapWithHoles& map, const CylinderWord& word, const RefineOptions& opts) {
  ExpansionProfile prof{word, {}, {}, {}, {}, {}, false, 0.0, 0, false};
  const std::size_t n = word.size();
  double sum = 0.0, raw_sum = 0.0;
  std::vector<TorusPoint> full;
  for (std::size_t j = 1; j <= n; ++j) {
    const CylinderGeometry g = refine_cylinder(map, word.prefix(j), opts);
    if (g.empty) {
      prof = ExpansionProfile{word, {}, {}, {}, {}, {}, false, 0.0, 0, true};
      return prof;
    }
    const int k = word[j - 1];
    double wmin = std::numeric_limits<double>::infinity();
    for (const TorusPoint& x0 : g.witnesses) {
      TorusPoint x = x0;
      for (std::size_t i = 1; i < j; ++i) x = map.forward(x);
      wmin = std::min(wmin, map.log_conorm(x));
    }
    const double floor = map.expansion_floor(k);
    const double term = std::max(floor, wmin - map.expansion_lipschitz(k) * map.branch_diameter(k));
    sum += term;
    raw_sum += wmin;
    prof.floors.push_back(floor);
    prof.terms.push_back(term);
    prof.raw_terms.push_back(wmin);
    prof.phi.push_back(sum / static_cast<double>(j));
    prof.raw_phi.push_back(raw_sum / static_cast<double>(j));
    if (j == n) full = g.witnesses;
  }

  prof.witnesses = full.size();
  const double target = static_cast<double>(n) * prof.phi.back();
  double worst = std::numeric_limits<double>::infinity();
  for (const TorusPoint& x : full)
    worst = std::min(worst, log_least_expansion(map, x, static_cast<int>(n)) - target);
  prof.worst_product_margin = worst;
  prof.product_check = worst >= -1e-9 * static_cast<double>(n);
  return prof;
}

}  // namespace repeller::holes
