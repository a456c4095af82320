#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace repeller::geometry {

inline constexpr int kMaxDim = 3;

/// Canonical representative of x modulo 1, in [0, 1).
inline double wrap_unit(double x) noexcept {
  double r = x - std::floor(x);
  // floor(x) of a tiny negative x rounds r up to exactly 1.0
  return r >= 1.0 ? 0.0 : r;
}

/// Representative of x modulo 1 in [-1/2, 1/2).
inline double centered(double x) noexcept {
  double r = x - std::floor(x + 0.5);
  return r >= 0.5 ? r - 1.0 : r;
}

/// A point of the flat torus T^d, d in {1, 2, 3}. Coordinates are always the
/// canonical lift in [0, 1)^d; unused trailing coordinates are zero.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(int dim);
  TorusPoint(std::initializer_list<double> coords);

  /// Builds a point from arbitrary real coordinates, wrapping each modulo 1.
  static TorusPoint wrapped(std::span<const double> coords);
  static TorusPoint wrapped(const std::array<double, kMaxDim>& coords, int dim);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return coords_[static_cast<std::size_t>(i)]; }
  const std::array<double, kMaxDim>& coords() const noexcept { return coords_; }

  /// Coordinates shifted to [-1/2, 1/2)^d, i.e. the lift nearest the origin.
  std::array<double, kMaxDim> centered_lift() const noexcept;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  std::array<double, kMaxDim> coords_{};
  int dim_ = 0;
};

/// Flat-torus distance: Euclidean distance minimised over integer translates.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

/// Axis-aligned box in lifted coordinates (may extend outside [0,1)^d).
struct Box {
  std::array<double, kMaxDim> lo{};
  std::array<double, kMaxDim> hi{};
  int dim = 0;

  double volume() const noexcept;
  double diameter() const noexcept;
  bool contains_lift(const std::array<double, kMaxDim>& p) const noexcept;
  /// Smallest box containing both.
  static Box hull(const Box& a, const Box& b);
  static Box unit(int dim);
};

}  // namespace repeller::geometry
