#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "repeller/geometry/torus.hpp"

namespace repeller::geometry {

/// Occupancy bitmask over the uniform grid of side eps = base^-level on T^d.
class GridCover {
 public:
  GridCover() = default;
  GridCover(int dim, int base, int level);

  int dim() const noexcept { return dim_; }
  int base() const noexcept { return base_; }
  int level() const noexcept { return level_; }
  std::size_t side() const noexcept { return side_; }
  std::size_t cells() const noexcept { return cells_; }
  double epsilon() const noexcept { return 1.0 / static_cast<double>(side_); }
  double cell_volume() const noexcept;

  std::size_t index_of(const TorusPoint& p) const noexcept;
  std::array<std::size_t, kMaxDim> cell_coords(std::size_t index) const noexcept;
  std::size_t index_from_coords(const std::array<std::size_t, kMaxDim>& c) const noexcept;
  Box cell_box(std::size_t index) const noexcept;

  void mark(std::size_t index) noexcept { bits_[index >> 6] |= (std::uint64_t{1} << (index & 63)); }
  void mark(const TorusPoint& p) noexcept { mark(index_of(p)); }
  void clear(std::size_t index) noexcept { bits_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }
  bool test(std::size_t index) const noexcept { return (bits_[index >> 6] >> (index & 63)) & 1U; }
  /// Marks every cell meeting the lifted box, wrapping modulo 1.
  void mark_box(const Box& lifted);
  void fill() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  double occupied_volume() const noexcept { return static_cast<double>(count()) * cell_volume(); }
  std::vector<std::size_t> occupied() const;

  /// Cover one level coarser: a coarse cell is occupied iff any child is.
  GridCover coarsened() const;
  /// Cover one level finer: every child of an occupied cell is occupied.
  GridCover refined() const;
  GridCover& operator|=(const GridCover& other);
  GridCover& operator&=(const GridCover& other);

  /// 16-byte header ("GCV1", u16 d, u16 base, u32 level, u32 count) followed by
  /// LEB128 run lengths alternating empty/occupied, starting with empty.
  std::vector<std::uint8_t> serialize() const;
  static GridCover deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const GridCover&, const GridCover&) = default;

 private:
  int dim_ = 0;
  int base_ = 2;
  int level_ = 0;
  std::size_t side_ = 1;
  std::size_t cells_ = 1;
  std::vector<std::uint64_t> bits_;
};

/// Recognises eps = base^-level for base 2 or 3; returns false otherwise.
bool decompose_epsilon(double eps, int& base, int& level) noexcept;

}  // namespace repeller::geometry
