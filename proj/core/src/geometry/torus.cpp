#include "repeller/geometry/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace repeller::geometry {

namespace {
void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("torus dimension must be 1, 2 or 3");
}
}  // namespace

TorusPoint::TorusPoint(int dim) : dim_(dim) { check_dim(dim); }

TorusPoint::TorusPoint(std::initializer_list<double> coords)
    : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  std::size_t i = 0;
  for (double c : coords) coords_[i++] = wrap_unit(c);
}

TorusPoint TorusPoint::wrapped(std::span<const double> coords) {
  TorusPoint p(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p.coords_[i] = wrap_unit(coords[i]);
  return p;
}

TorusPoint TorusPoint::wrapped(const std::array<double, kMaxDim>& coords, int dim) {
  return wrapped(std::span<const double>(coords.data(), static_cast<std::size_t>(dim)));
}

std::array<double, kMaxDim> TorusPoint::centered_lift() const noexcept {
  std::array<double, kMaxDim> out{};
  for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(i)] = centered(coords_[static_cast<std::size_t>(i)]);
  return out;
}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("torus_distance: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = centered(a[i] - b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

double Box::volume() const noexcept {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= std::max(0.0, hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]);
  return v;
}

double Box::diameter() const noexcept {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double d = hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
    s += d * d;
  }
  return std::sqrt(s);
}

bool Box::contains_lift(const std::array<double, kMaxDim>& p) const noexcept {
  for (int i = 0; i < dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (p[k] < lo[k] || p[k] > hi[k]) return false;
  }
  return true;
}

Box Box::hull(const Box& a, const Box& b) {
  if (a.dim != b.dim) throw std::invalid_argument("Box::hull: dimension mismatch");
  Box out = a;
  for (int i = 0; i < a.dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out.lo[k] = std::min(a.lo[k], b.lo[k]);
    out.hi[k] = std::max(a.hi[k], b.hi[k]);
  }
  return out;
}

Box Box::unit(int dim) {
  check_dim(dim);
  Box b;
  b.dim = dim;
  for (int i = 0; i < dim; ++i) b.hi[static_cast<std::size_t>(i)] = 1.0;
  return b;
}

}  // namespace repeller::geometry
