#include "repeller/holes/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

#include "repeller/geometry/lebesgue.hpp"
#include "repeller/geometry/rng.hpp"

namespace repeller::holes {

using geometry::Box;
using geometry::GridCover;
using geometry::kMaxDim;

CylinderWord::CylinderWord(std::vector<int> symbols, int branch_count)
    : symbols_(std::move(symbols)), branch_count_(branch_count) {
  if (symbols_.empty()) throw std::invalid_argument("CylinderWord: word must be nonempty");
  for (int s : symbols_)
    if (s < 0 || s >= branch_count) throw std::invalid_argument("CylinderWord: symbol out of range");
}

CylinderWord CylinderWord::prefix(std::size_t j) const {
  if (j < 1 || j > symbols_.size()) throw std::out_of_range("CylinderWord::prefix");
  return CylinderWord(std::vector<int>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(j)),
                      branch_count_);
}

std::string CylinderWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0 && branch_count_ > 10) s += '.';
    s += std::to_string(symbols_[i]);
  }
  return s;
}

bool in_cylinder(const MapWithHoles& map, const TorusPoint& x, const CylinderWord& word) {
  TorusPoint p = x;
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto b = map.branch_of(p);
    if (!b || *b != word[j]) return false;
    if (j + 1 < word.size()) p = map.forward(p);
  }
  return true;
}

namespace {

constexpr double kInset = 1e-10;
constexpr double kMaxSpread = 0.25;
constexpr int kMaxSplit = 20;
constexpr double kNonAffineInflation = 0.25;

void mark_point(GridCover& out, const TorusPoint& p) { out.mark(p); }

void pull_box(const MapWithHoles& map, int k, const Box& b, bool affine, int depth, GridCover& out) {
  const int d = b.dim;
  int lattice = 1;
  for (int i = 0; i < d; ++i) lattice *= 3;

  std::array<TorusPoint, 27> images;
  for (int idx = 0; idx < lattice; ++idx) {
    std::array<double, kMaxDim> p{};
    int r = idx;
    for (int i = 0; i < d; ++i) {
      const auto a = static_cast<std::size_t>(i);
      const double lo = b.lo[a] + kInset, hi = b.hi[a] - kInset;
      p[a] = lo + (hi - lo) * 0.5 * (r % 3);
      r /= 3;
    }
    images[static_cast<std::size_t>(idx)] = map.inverse(k, TorusPoint::wrapped(p, d));
  }
  const TorusPoint& c = images[static_cast<std::size_t>(lattice / 2)];

  Box hull;
  hull.dim = d;
  for (int i = 0; i < d; ++i) {
    const auto a = static_cast<std::size_t>(i);
    hull.lo[a] = hull.hi[a] = c[i];
  }
  double spread = 0.0;
  for (int idx = 0; idx < lattice; ++idx) {
    const TorusPoint& y = images[static_cast<std::size_t>(idx)];
    for (int i = 0; i < d; ++i) {
      const auto a = static_cast<std::size_t>(i);
      const double v = c[i] + geometry::centered(y[i] - c[i]);
      hull.lo[a] = std::min(hull.lo[a], v);
      hull.hi[a] = std::max(hull.hi[a], v);
      spread = std::max(spread, hull.hi[a] - hull.lo[a]);
    }
  }

  if (spread > kMaxSpread) {
    if (depth >= kMaxSplit) {
      for (int idx = 0; idx < lattice; ++idx) mark_point(out, images[static_cast<std::size_t>(idx)]);
      return;
    }
    for (int corner = 0; corner < (1 << d); ++corner) {
      Box child = b;
      for (int i = 0; i < d; ++i) {
        const auto a = static_cast<std::size_t>(i);
        const double mid = 0.5 * (b.lo[a] + b.hi[a]);
        if ((corner >> i) & 1)
          child.lo[a] = mid;
        else
          child.hi[a] = mid;
      }
      pull_box(map, k, child, affine, depth + 1, out);
    }
    return;
  }

  if (!affine) {
    for (int i = 0; i < d; ++i) {
      const auto a = static_cast<std::size_t>(i);
      const double pad = kNonAffineInflation * (hull.hi[a] - hull.lo[a]);
      hull.lo[a] -= pad;
      hull.hi[a] += pad;
    }
  }
  out.mark_box(hull);
}

void drop_hole_boxes(const MapWithHoles& map, GridCover& cover) {
  for (std::size_t idx : cover.occupied())
    if (map.box_inside_hole(cover.cell_box(idx))) cover.clear(idx);
}

}  // namespace

GridCover pullback_cover(const MapWithHoles& map, const CylinderWord& word, int base, int level) {
  const int d = map.dimension();
  GridCover cover(d, base, level);
  cover.fill();
  for (std::size_t j = word.size(); j-- > 0;) {
    const int k = word[j];
    const bool affine = map.inverse_is_affine(k);
    GridCover next(d, base, level);
    for (std::size_t idx : cover.occupied()) pull_box(map, k, cover.cell_box(idx), affine, 0, next);
    drop_hole_boxes(map, next);
    cover = std::move(next);
    if (cover.empty()) break;
  }
  return cover;
}

CylinderGeometry refine_cylinder(const MapWithHoles& map, const CylinderWord& word, const RefineOptions& opts) {
  if (word.branch_count() != map.branch_count())
    throw std::invalid_argument("refine_cylinder: word alphabet does not match the map");
  if (opts.level < 1) throw std::invalid_argument("refine_cylinder: level must be >= 1");
  const int d = map.dimension();

  CylinderGeometry g{word, true, GridCover(d, opts.base, opts.level), {}, 0.0, 0.0, opts.level};
  for (int extra = 0; extra <= opts.max_extra_levels; ++extra) {
    const int level = opts.level + extra;
    g.level = level;
    g.outer = pullback_cover(map, word, opts.base, level);
    g.witnesses.clear();
    g.volume_hi = g.outer.occupied_volume();
    g.volume_lo = 0.0;
    if (g.outer.empty()) return g;

    std::size_t hits = 0, samples = 0;
    for (std::size_t idx : g.outer.occupied()) {
      const Box box = g.outer.cell_box(idx);
      geometry::Rng rng(opts.seed, idx, static_cast<std::uint64_t>(level));
      for (std::size_t s = 0; s < opts.samples_per_box; ++s) {
        std::array<double, kMaxDim> p{};
        for (int i = 0; i < d; ++i) {
          const auto a = static_cast<std::size_t>(i);
          p[a] = rng.uniform(box.lo[a], box.hi[a]);
        }
        const TorusPoint x = TorusPoint::wrapped(p, d);
        ++samples;
        if (in_cylinder(map, x, word)) {
          ++hits;
          if (g.witnesses.size() < opts.max_witnesses) g.witnesses.push_back(x);
        }
      }
    }
    if (hits > 0) {
      g.empty = false;
      g.volume_lo = g.volume_hi * geometry::binomial_interval(hits, samples).lo;
      return g;
    }
  }
  return g;
}

}  // namespace repeller::holes
