#include "repeller/geometry/region.hpp"

#include <numbers>
#include <stdexcept>

namespace repeller::geometry {

Region::Region(std::string label, Box bbox, Membership contains, std::optional<double> exact_volume)
    : label_(std::move(label)), bbox_(bbox), contains_(std::move(contains)), exact_volume_(exact_volume) {
  if (!contains_) throw std::invalid_argument("Region: membership test required");
  if (bbox_.dim < 1 || bbox_.dim > kMaxDim) throw std::invalid_argument("Region: bad dimension");
}

Region Region::ball(const TorusPoint& center, double radius, std::string label) {
  if (radius < 0.0) throw std::invalid_argument("Region::ball: negative radius");
  const int d = center.dim();
  Box b;
  b.dim = d;
  for (int i = 0; i < d; ++i) {
    const auto k = static_cast<std::size_t>(i);
    b.lo[k] = center[i] - radius;
    b.hi[k] = center[i] + radius;
  }
  double vol = 2.0 * radius;
  if (d == 2) vol = std::numbers::pi * radius * radius;
  if (d == 3) vol = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
  // Only exact while the ball does not wrap onto itself.
  std::optional<double> exact;
  if (radius <= 0.5) exact = vol;
  return Region(std::move(label), b,
                [center, radius](const TorusPoint& p) { return torus_distance(p, center) < radius; },
                exact);
}

Region Region::rectangle(const Box& lifted, std::string label) {
  std::optional<double> exact;
  bool fits = true;
  for (int i = 0; i < lifted.dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (lifted.hi[k] - lifted.lo[k] > 1.0) fits = false;
  }
  if (fits) exact = lifted.volume();
  return Region(std::move(label), lifted,
                [lifted](const TorusPoint& p) {
                  for (int i = 0; i < lifted.dim; ++i) {
                    const auto k = static_cast<std::size_t>(i);
                    const double w = lifted.hi[k] - lifted.lo[k];
                    if (w >= 1.0) continue;
                    const double off = wrap_unit(p[i] - lifted.lo[k]);
                    if (!(off < w)) return false;
                  }
                  return true;
                },
                exact);
}

Region Region::interval(double a, double b, std::string label) {
  if (b < a) throw std::invalid_argument("Region::interval: b < a");
  Box box;
  box.dim = 1;
  box.lo[0] = a;
  box.hi[0] = b;
  return rectangle(box, std::move(label));
}

Region Region::empty(int dim, std::string label) {
  return Region(std::move(label), Box::unit(dim), [](const TorusPoint&) { return false; }, 0.0);
}

Region Region::whole(int dim, std::string label) {
  return Region(std::move(label), Box::unit(dim), [](const TorusPoint&) { return true; }, 1.0);
}

}  // namespace repeller::geometry
