#include "repeller/holes/map_with_holes.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace repeller::holes {

double MapWithHoles::log_conorm(const TorusPoint& x) const {
  const Jacobian j = jacobian(x);
  Eigen::JacobiSVD<Jacobian> svd(j);
  return std::log(svd.singularValues().minCoeff());
}

double MapWithHoles::inverse_derivative_norm(const TorusPoint& x) const { return std::exp(-log_conorm(x)); }

bool MapWithHoles::box_inside_hole(const geometry::Box& b) const {
  const int d = dimension();
  for (int corner = 0; corner < (1 << d); ++corner) {
    std::array<double, geometry::kMaxDim> p{};
    for (int i = 0; i < d; ++i) {
      const auto k = static_cast<std::size_t>(i);
      p[k] = (corner >> i) & 1 ? b.hi[k] : b.lo[k];
    }
    if (!in_hole(TorusPoint::wrapped(p, d))) return false;
  }
  return true;
}

std::vector<int> MapWithHoles::successors(int) const {
  std::vector<int> all(static_cast<std::size_t>(branch_count()));
  for (int i = 0; i < branch_count(); ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

}  // namespace repeller::holes
