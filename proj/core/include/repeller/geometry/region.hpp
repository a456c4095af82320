#pragma once

#include <functional>
#include <optional>
#include <string>

#include "repeller/geometry/torus.hpp"

namespace repeller::geometry {

/// A measurable subset of T^d given by a membership predicate. The bounding
/// box is expressed in lifted coordinates and may straddle the unit cell.
class Region {
 public:
  using Membership = std::function<bool(const TorusPoint&)>;

  Region(std::string label, Box bbox, Membership contains,
         std::optional<double> exact_volume = std::nullopt);

  /// Open Euclidean disk (d = 2) or ball (d = 3), or open interval (d = 1).
  static Region ball(const TorusPoint& center, double radius, std::string label = "ball");
  /// Half-open lifted box [lo, hi); wraps around the torus if it leaves [0,1)^d.
  static Region rectangle(const Box& lifted, std::string label = "rectangle");
  static Region interval(double a, double b, std::string label = "interval");
  static Region empty(int dim, std::string label = "empty");
  static Region whole(int dim, std::string label = "torus");

  bool contains(const TorusPoint& p) const { return contains_(p); }
  const Box& bbox() const noexcept { return bbox_; }
  int dim() const noexcept { return bbox_.dim; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<double>& exact_volume() const noexcept { return exact_volume_; }

 private:
  std::string label_;
  Box bbox_;
  Membership contains_;
  std::optional<double> exact_volume_;
};

}  // namespace repeller::geometry
