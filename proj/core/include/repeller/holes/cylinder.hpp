#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "repeller/geometry/grid_cover.hpp"
#include "repeller/holes/map_with_holes.hpp"

namespace repeller::holes {

/// Symbol sequence (a_1, ..., a_n) with a_i in [0, branch_count).
class CylinderWord {
 public:
  CylinderWord(std::vector<int> symbols, int branch_count);

  std::size_t size() const noexcept { return symbols_.size(); }
  int operator[](std::size_t i) const noexcept { return symbols_[i]; }
  const std::vector<int>& symbols() const noexcept { return symbols_; }
  int branch_count() const noexcept { return branch_count_; }
  /// First j symbols; 1 <= j <= size().
  CylinderWord prefix(std::size_t j) const;
  std::string to_string() const;

  friend bool operator==(const CylinderWord&, const CylinderWord&) = default;
  friend auto operator<=>(const CylinderWord& a, const CylinderWord& b) { return a.symbols_ <=> b.symbols_; }

 private:
  std::vector<int> symbols_;
  int branch_count_ = 0;
};

/// True when x lies in the cylinder: f^(j-1)(x) in R_{a_j} for every j.
bool in_cylinder(const MapWithHoles& map, const TorusPoint& x, const CylinderWord& word);

struct RefineOptions {
  int base = 2;
  int level = 7;
  std::size_t samples_per_box = 8;
  int max_extra_levels = 3;
  std::size_t max_witnesses = 4096;
  std::uint64_t seed = 1;
};

struct CylinderGeometry {
  CylinderWord word;
  bool empty = false;
  geometry::GridCover outer;
  std::vector<TorusPoint> witnesses;
  double volume_lo = 0.0;
  double volume_hi = 0.0;
  int level = 0;
};

/// Grid cover of the cylinder obtained by pulling the torus back through the
/// inverse branches a_n, ..., a_1, dropping boxes inside the hole after each step.
geometry::GridCover pullback_cover(const MapWithHoles& map, const CylinderWord& word, int base, int level);

/// Outer cover plus forward-verified witnesses. If no witness is found the
/// grid is refined up to max_extra_levels times; a cylinder whose cover
/// empties, or that stays witness-free, is returned with `empty` set.
CylinderGeometry refine_cylinder(const MapWithHoles& map, const CylinderWord& word, const RefineOptions& opts = {});

}  // namespace repeller::holes
