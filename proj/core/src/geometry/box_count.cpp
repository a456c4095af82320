#include "repeller/geometry/box_count.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "repeller/geometry/parallel.hpp"

namespace repeller::geometry {

namespace {

constexpr std::size_t kBlock = 4096;

GridCover checked_grid(int dim, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("box_count: eps must be positive");
  int base = 0, level = 0;
  if (!decompose_epsilon(eps, base, level))
    throw std::invalid_argument("box_count: eps must be 2^-k or 3^-k");
  return GridCover(dim, base, level);
}

TorusPoint point_in_box(const Box& b, const std::array<double, kMaxDim>& frac) {
  std::array<double, kMaxDim> x{};
  for (int i = 0; i < b.dim; ++i) {
    const auto k = static_cast<std::size_t>(i);
    x[k] = b.lo[k] + frac[k] * (b.hi[k] - b.lo[k]);
  }
  return TorusPoint::wrapped(x, b.dim);
}

}  // namespace

GridCover sample_cover(int dim, const PointSampler& sampler, double eps, std::size_t budget,
                       std::uint64_t seed, unsigned jobs) {
  GridCover grid = checked_grid(dim, eps);
  if (budget == 0) throw std::invalid_argument("box_count: sample budget must be positive");
  const std::size_t blocks = (budget + kBlock - 1) / kBlock;
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(blocks)));
  std::vector<GridCover> partial(workers, grid);
  parallel_blocks(blocks, workers, [&](std::size_t b0, std::size_t b1, unsigned w) {
    for (std::size_t b = b0; b < b1; ++b) {
      Rng rng(seed, b);
      const std::size_t n = std::min(kBlock, budget - b * kBlock);
      for (std::size_t s = 0; s < n; ++s) partial[w].mark(sampler(rng));
    }
  });
  for (const auto& p : partial) grid |= p;
  return grid;
}

std::size_t box_count(int dim, const PointSampler& sampler, double eps, std::size_t budget,
                      std::uint64_t seed, unsigned jobs) {
  return sample_cover(dim, sampler, eps, budget, seed, jobs).count();
}

EscapeCoverResult escape_cover(int dim, const SurvivalTest& survives, const EscapeCoverOptions& opts) {
  if (opts.samples_per_box == 0) throw std::invalid_argument("escape_cover: samples_per_box must be positive");
  EscapeCoverResult res{GridCover(dim, opts.base, opts.level), 0, 0};
  GridCover& grid = res.cover;
  const std::size_t cells = grid.cells();
  std::vector<std::uint8_t> hit(cells, 0);
  std::vector<std::size_t> evals(std::max(1u, opts.jobs), 0);

  const auto k = static_cast<std::size_t>(
      std::max(1.0, std::round(std::pow(static_cast<double>(opts.samples_per_box), 1.0 / dim))));
  std::size_t lattice = 1;
  for (int i = 0; i < dim; ++i) lattice *= k;

  parallel_blocks(cells, opts.jobs, [&](std::size_t c0, std::size_t c1, unsigned w) {
    for (std::size_t c = c0; c < c1; ++c) {
      const Box b = grid.cell_box(c);
      Rng rng(opts.seed, c, 0);
      for (std::size_t j = 0; j < lattice; ++j) {
        std::array<double, kMaxDim> f{};
        std::size_t r = j;
        for (int i = 0; i < dim; ++i) {
          f[static_cast<std::size_t>(i)] = (static_cast<double>(r % k) + rng.uniform()) / static_cast<double>(k);
          r /= k;
        }
        ++evals[w];
        if (survives(point_in_box(b, f))) {
          hit[c] = 1;
          break;
        }
      }
    }
  });

  auto total = [&] {
    std::size_t n = 0;
    for (auto h : hit) n += h;
    return n;
  };
  std::size_t count = total();
  for (int round = 1; round <= opts.max_doublings; ++round) {
    std::vector<std::size_t> empty;
    for (std::size_t c = 0; c < cells; ++c)
      if (!hit[c]) empty.push_back(c);
    if (empty.empty()) break;
    const std::size_t n = lattice << round;
    parallel_blocks(empty.size(), opts.jobs, [&](std::size_t e0, std::size_t e1, unsigned w) {
      for (std::size_t e = e0; e < e1; ++e) {
        const std::size_t c = empty[e];
        const Box b = grid.cell_box(c);
        Rng rng(opts.seed, c, static_cast<std::uint64_t>(round));
        for (std::size_t j = 0; j < n; ++j) {
          std::array<double, kMaxDim> f{};
          for (int i = 0; i < dim; ++i) f[static_cast<std::size_t>(i)] = rng.uniform();
          ++evals[w];
          if (survives(point_in_box(b, f))) {
            hit[c] = 1;
            break;
          }
        }
      }
    });
    res.doublings = round;
    const std::size_t next = total();
    const double change = count == 0 ? (next == 0 ? 0.0 : 1.0)
                                     : static_cast<double>(next - count) / static_cast<double>(count);
    count = next;
    if (change < opts.tolerance) break;
  }
  for (std::size_t c = 0; c < cells; ++c)
    if (hit[c]) grid.mark(c);
  for (auto e : evals) res.evaluations += e;
  return res;
}

std::vector<std::pair<double, std::size_t>> ladder_counts(const GridCover& finest, int min_level) {
  if (min_level < 0 || min_level > finest.level()) throw std::invalid_argument("ladder_counts: bad level range");
  std::vector<std::pair<double, std::size_t>> out;
  GridCover g = finest;
  while (true) {
    out.emplace_back(g.epsilon(), g.count());
    if (g.level() == min_level) break;
    g = g.coarsened();
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace repeller::geometry
