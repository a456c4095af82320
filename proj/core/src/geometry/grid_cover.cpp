#include "repeller/geometry/grid_cover.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace repeller::geometry {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 31;

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[at + static_cast<std::size_t>(i)]) << (8 * i);
  return v;
}

void put_leb128(std::vector<std::uint8_t>& out, std::uint64_t v) {
  do {
    std::uint8_t byte = v & 0x7f;
    v >>= 7;
    if (v != 0) byte |= 0x80;
    out.push_back(byte);
  } while (v != 0);
}

std::uint64_t get_leb128(std::span<const std::uint8_t> b, std::size_t& at) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (at >= b.size()) throw std::runtime_error("GridCover: truncated run-length body");
    const std::uint8_t byte = b[at++];
    v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) break;
    shift += 7;
    if (shift > 63) throw std::runtime_error("GridCover: malformed run length");
  }
  return v;
}

}  // namespace

GridCover::GridCover(int dim, int base, int level) : dim_(dim), base_(base), level_(level) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("GridCover: dimension must be 1, 2 or 3");
  if (base < 2) throw std::invalid_argument("GridCover: base must be >= 2");
  if (level < 0) throw std::invalid_argument("GridCover: level must be >= 0");
  side_ = ipow(static_cast<std::size_t>(base), level);
  cells_ = ipow(side_, dim);
  if (cells_ > kMaxCells || side_ == 0) throw std::invalid_argument("GridCover: grid too large");
  bits_.assign((cells_ + 63) / 64, 0);
}

double GridCover::cell_volume() const noexcept { return std::pow(epsilon(), dim_); }

std::size_t GridCover::index_of(const TorusPoint& p) const noexcept {
  std::array<std::size_t, kMaxDim> c{};
  const double s = static_cast<double>(side_);
  for (int i = 0; i < dim_; ++i) {
    auto k = static_cast<std::size_t>(wrap_unit(p[i]) * s);
    c[static_cast<std::size_t>(i)] = k >= side_ ? side_ - 1 : k;
  }
  return index_from_coords(c);
}

std::array<std::size_t, kMaxDim> GridCover::cell_coords(std::size_t index) const noexcept {
  std::array<std::size_t, kMaxDim> c{};
  for (int i = 0; i < dim_; ++i) {
    c[static_cast<std::size_t>(i)] = index % side_;
    index /= side_;
  }
  return c;
}

std::size_t GridCover::index_from_coords(const std::array<std::size_t, kMaxDim>& c) const noexcept {
  std::size_t idx = 0;
  for (int i = dim_ - 1; i >= 0; --i) idx = idx * side_ + c[static_cast<std::size_t>(i)];
  return idx;
}

Box GridCover::cell_box(std::size_t index) const noexcept {
  const auto c = cell_coords(index);
  Box b;
  b.dim = dim_;
  const double e = epsilon();
  for (int i = 0; i < dim_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    b.lo[k] = static_cast<double>(c[k]) * e;
    b.hi[k] = static_cast<double>(c[k] + 1) * e;
  }
  return b;
}

void GridCover::mark_box(const Box& lifted) {
  if (lifted.dim != dim_) throw std::invalid_argument("GridCover::mark_box: dimension mismatch");
  const double s = static_cast<double>(side_);
  // Tolerance keeps boxes whose edge lands on a grid line from leaking into the neighbour.
  constexpr double tol = 1e-9;
  std::array<long long, kMaxDim> first{}, span{};
  for (int i = 0; i < dim_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double a = lifted.lo[k] * s;
    const double b = lifted.hi[k] * s;
    long long lo = static_cast<long long>(std::floor(a + tol));
    long long hi = static_cast<long long>(std::ceil(b - tol)) - 1;
    if (hi < lo) hi = lo;
    first[k] = lo;
    span[k] = std::min<long long>(hi - lo + 1, static_cast<long long>(side_));
  }
  const long long sd = static_cast<long long>(side_);
  auto wrap = [sd](long long v) { return static_cast<std::size_t>(((v % sd) + sd) % sd); };
  std::array<std::size_t, kMaxDim> c{};
  const long long n2 = dim_ > 2 ? span[2] : 1;
  const long long n1 = dim_ > 1 ? span[1] : 1;
  for (long long z = 0; z < n2; ++z) {
    if (dim_ > 2) c[2] = wrap(first[2] + z);
    for (long long y = 0; y < n1; ++y) {
      if (dim_ > 1) c[1] = wrap(first[1] + y);
      for (long long x = 0; x < span[0]; ++x) {
        c[0] = wrap(first[0] + x);
        mark(index_from_coords(c));
      }
    }
  }
}

void GridCover::fill() noexcept {
  for (std::size_t i = 0; i < cells_; ++i) mark(i);
}

std::size_t GridCover::count() const noexcept {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> GridCover::occupied() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      out.push_back(w * 64 + static_cast<std::size_t>(b));
      word &= word - 1;
    }
  }
  return out;
}

GridCover GridCover::coarsened() const {
  if (level_ == 0) throw std::logic_error("GridCover::coarsened: already at level 0");
  GridCover out(dim_, base_, level_ - 1);
  const auto b = static_cast<std::size_t>(base_);
  for (std::size_t idx : occupied()) {
    auto c = cell_coords(idx);
    for (int i = 0; i < dim_; ++i) c[static_cast<std::size_t>(i)] /= b;
    out.mark(out.index_from_coords(c));
  }
  return out;
}

GridCover GridCover::refined() const {
  GridCover out(dim_, base_, level_ + 1);
  const auto b = static_cast<std::size_t>(base_);
  const std::size_t children = ipow(b, dim_);
  for (std::size_t idx : occupied()) {
    const auto c = cell_coords(idx);
    for (std::size_t ch = 0; ch < children; ++ch) {
      std::array<std::size_t, kMaxDim> cc{};
      std::size_t r = ch;
      for (int i = 0; i < dim_; ++i) {
        const auto k = static_cast<std::size_t>(i);
        cc[k] = c[k] * b + r % b;
        r /= b;
      }
      out.mark(out.index_from_coords(cc));
    }
  }
  return out;
}

GridCover& GridCover::operator|=(const GridCover& other) {
  if (other.dim_ != dim_ || other.base_ != base_ || other.level_ != level_)
    throw std::invalid_argument("GridCover: merging covers of different grids");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

GridCover& GridCover::operator&=(const GridCover& other) {
  if (other.dim_ != dim_ || other.base_ != base_ || other.level_ != level_)
    throw std::invalid_argument("GridCover: intersecting covers of different grids");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

std::vector<std::uint8_t> GridCover::serialize() const {
  std::vector<std::uint8_t> out{'G', 'C', 'V', '1'};
  put_u16(out, static_cast<std::uint16_t>(dim_));
  put_u16(out, static_cast<std::uint16_t>(base_));
  put_u32(out, static_cast<std::uint32_t>(level_));
  put_u32(out, static_cast<std::uint32_t>(count()));
  bool state = false;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < cells_; ++i) {
    if (test(i) != state) {
      put_leb128(out, run);
      state = !state;
      run = 0;
    }
    ++run;
  }
  put_leb128(out, run);
  return out;
}

GridCover GridCover::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 16 || bytes[0] != 'G' || bytes[1] != 'C' || bytes[2] != 'V' || bytes[3] != '1')
    throw std::runtime_error("GridCover: bad magic");
  const int dim = bytes[4] | (bytes[5] << 8);
  const int base = bytes[6] | (bytes[7] << 8);
  const auto level = static_cast<int>(get_u32(bytes, 8));
  const std::uint32_t expected = get_u32(bytes, 12);
  GridCover g(dim, base, level);
  std::size_t at = 16, pos = 0;
  bool state = false;
  while (pos < g.cells_) {
    const std::uint64_t run = get_leb128(bytes, at);
    if (run > g.cells_ - pos) throw std::runtime_error("GridCover: run exceeds grid");
    if (state)
      for (std::uint64_t k = 0; k < run; ++k) g.mark(pos + k);
    pos += run;
    state = !state;
  }
  if (g.count() != expected) throw std::runtime_error("GridCover: count mismatch");
  return g;
}

bool decompose_epsilon(double eps, int& base, int& level) noexcept {
  if (!(eps > 0.0) || eps > 1.0) return false;
  for (int b : {2, 3}) {
    double v = 1.0;
    for (int k = 0; k <= 40; ++k) {
      if (std::abs(v - eps) <= 1e-12 * eps) {
        base = b;
        level = k;
        return true;
      }
      v /= b;
    }
  }
  return false;
}

}  // namespace repeller::geometry
