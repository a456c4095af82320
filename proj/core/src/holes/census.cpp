#include "repeller/holes/census.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "repeller/geometry/lebesgue.hpp"
#include "repeller/geometry/parallel.hpp"
#include "repeller/geometry/rng.hpp"

namespace repeller::holes {

namespace {

using geometry::kMaxDim;

/// Decides whether a child is pruned from its depth and accumulated term sum.
using PrunePredicate = std::function<bool(int depth, double sum)>;

std::vector<TorusPoint> stratified_starts(int d, std::size_t budget, std::uint64_t seed, unsigned jobs) {
  std::size_t g = 1;
  auto power = [d](std::size_t v) {
    std::size_t r = 1;
    for (int i = 0; i < d; ++i) r *= v;
    return r;
  };
  while (power(g + 1) <= budget) ++g;
  const std::size_t total = power(g);
  std::vector<TorusPoint> pts(total);
  geometry::parallel_blocks(total, jobs, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      geometry::Rng rng(seed, 0xce5u, i);
      std::array<double, kMaxDim> p{};
      std::size_t r = i;
      for (int a = 0; a < d; ++a) {
        const auto cell = static_cast<double>(r % g);
        r /= g;
        p[static_cast<std::size_t>(a)] = (cell + rng.uniform()) / static_cast<double>(g);
      }
      pts[i] = TorusPoint::wrapped(p, d);
    }
  });
  return pts;
}

struct Frontier {
  int node;
  std::vector<std::uint32_t> samples;
};

}  // namespace

std::size_t Census::kept_total() const noexcept {
  std::size_t s = 0;
  for (const auto& l : levels_) s += l.kept;
  return s;
}

std::size_t Census::pruned_total() const noexcept {
  std::size_t s = 0;
  for (const auto& l : levels_) s += l.pruned;
  return s;
}

std::size_t Census::visited_total() const noexcept {
  std::size_t s = 0;
  for (const auto& l : levels_) s += l.visited;
  return s;
}

CylinderWord Census::word(int node) const {
  std::vector<int> symbols;
  for (int v = node; v > 0; v = nodes_[static_cast<std::size_t>(v)].parent)
    symbols.push_back(nodes_[static_cast<std::size_t>(v)].symbol);
  std::reverse(symbols.begin(), symbols.end());
  return CylinderWord(std::move(symbols), branch_count_);
}

int Census::child(int node, int symbol) const noexcept {
  const CensusNode& p = nodes_[static_cast<std::size_t>(node)];
  for (int c = p.first_child; c >= 0 && c < p.first_child + p.child_count; ++c)
    if (nodes_[static_cast<std::size_t>(c)].symbol == symbol) return c;
  return -1;
}

int Census::classify(const MapWithHoles& map, const TorusPoint& x) const {
  TorusPoint p = x;
  int node = 0;
  for (int k = 0; k < depth_; ++k) {
    if (k >= completed_depth_) return kOutcomeUnknown;
    const auto b = map.branch_of(p);
    if (!b) return kOutcomeHole;
    const int c = child(node, *b);
    if (c < 0) return kOutcomeHole;
    if (nodes_[static_cast<std::size_t>(c)].status == NodeStatus::pruned) return k + 1;
    node = c;
    if (k + 1 == depth_) return kOutcomeBad;
    p = map.forward(p);
  }
  return kOutcomeBad;
}

struct CensusBuilder {
  static Census enumerate(const MapWithHoles& map, int n, double threshold, const CensusOptions& opts,
                          const PrunePredicate& prune, bool with_covers);
};

Census run_census(const MapWithHoles& map, int n, double threshold, const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("run_census: n must be >= 1");
  if (!(threshold >= 0.0)) throw std::invalid_argument("run_census: threshold must be >= 0");
  const PrunePredicate prune = [threshold](int depth, double sum) {
    return sum / static_cast<double>(depth) > threshold;
  };
  return CensusBuilder::enumerate(map, n, threshold, opts, prune, opts.outer_covers);
}

Census CensusBuilder::enumerate(const MapWithHoles& map, int n, double threshold, const CensusOptions& opts,
                                const PrunePredicate& prune, bool with_covers) {
  if (opts.samples < 1) throw std::invalid_argument("census: samples must be >= 1");
  const int m1 = map.branch_count();
  const unsigned jobs = std::max(1u, opts.jobs);

  Census c;
  c.depth_ = n;
  c.threshold_ = threshold;
  c.branch_count_ = m1;
  c.starts_ = stratified_starts(map.dimension(), opts.samples, opts.seed, jobs);
  const std::size_t N = c.starts_.size();
  c.outcomes_.assign(N, kOutcomeUnknown);
  c.nodes_.push_back(CensusNode{});

  std::vector<double> floors(static_cast<std::size_t>(m1)), slack(static_cast<std::size_t>(m1));
  for (int k = 0; k < m1; ++k) {
    floors[static_cast<std::size_t>(k)] = map.expansion_floor(k);
    slack[static_cast<std::size_t>(k)] = map.expansion_lipschitz(k) * map.branch_diameter(k);
  }
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(m1));
  for (int k = 0; k < m1; ++k) succ[static_cast<std::size_t>(k)] = map.successors(k);
  std::vector<int> all(static_cast<std::size_t>(m1));
  for (int k = 0; k < m1; ++k) all[static_cast<std::size_t>(k)] = k;

  std::vector<TorusPoint> cur = c.starts_;
  std::vector<int> branch(N, -1);
  std::vector<double> conorm(N, 0.0);
  std::vector<std::uint32_t> active(N);
  for (std::size_t i = 0; i < N; ++i) active[i] = static_cast<std::uint32_t>(i);

  std::vector<Frontier> frontier;
  frontier.push_back(Frontier{0, active});
  c.completed_depth_ = 0;

  for (int k = 0; k < n; ++k) {
    geometry::parallel_blocks(active.size(), jobs, [&](std::size_t b, std::size_t e, unsigned) {
      for (std::size_t a = b; a < e; ++a) {
        const std::uint32_t i = active[a];
        const auto s = map.branch_of(cur[i]);
        branch[i] = s ? *s : -1;
        conorm[i] = s ? map.log_conorm(cur[i]) : 0.0;
      }
    });

    DepthStats stats;
    stats.depth = k + 1;
    std::vector<Frontier> next;
    std::vector<int> kept_nodes;
    for (Frontier& f : frontier) {
      const int parent_symbol = c.nodes_[static_cast<std::size_t>(f.node)].symbol;
      const std::vector<int>& symbols = f.node == 0 ? all : succ[static_cast<std::size_t>(parent_symbol)];
      std::vector<std::vector<std::uint32_t>> buckets(static_cast<std::size_t>(m1));
      std::vector<char> allowed(static_cast<std::size_t>(m1), 0);
      for (int s : symbols) allowed[static_cast<std::size_t>(s)] = 1;
      for (std::uint32_t i : f.samples) {
        const int s = branch[i];
        if (s < 0 || !allowed[static_cast<std::size_t>(s)])
          c.outcomes_[i] = kOutcomeHole;
        else
          buckets[static_cast<std::size_t>(s)].push_back(i);
      }
      f.samples.clear();
      f.samples.shrink_to_fit();

      const int first = static_cast<int>(c.nodes_.size());
      const double parent_sum = c.nodes_[static_cast<std::size_t>(f.node)].phi * k;
      for (int s : symbols) {
        const auto su = static_cast<std::size_t>(s);
        auto& bucket = buckets[su];
        double term = floors[su];
        if (!bucket.empty()) {
          double wmin = std::numeric_limits<double>::infinity();
          for (std::uint32_t i : bucket) wmin = std::min(wmin, conorm[i]);
          term = std::max(term, wmin - slack[su]);
        }
        CensusNode node;
        node.parent = f.node;
        node.symbol = s;
        node.depth = k + 1;
        node.term = term;
        node.phi = (parent_sum + term) / static_cast<double>(k + 1);
        node.hits = bucket.size();
        node.status = prune(k + 1, parent_sum + term) ? NodeStatus::pruned : NodeStatus::kept;
        const int id = static_cast<int>(c.nodes_.size());
        c.nodes_.push_back(node);
        if (node.status == NodeStatus::pruned) {
          ++stats.pruned;
          for (std::uint32_t i : bucket) c.outcomes_[i] = k + 1;
        } else {
          ++stats.kept;
          stats.hits += bucket.size();
          kept_nodes.push_back(id);
          if (k + 1 == n)
            for (std::uint32_t i : bucket) c.outcomes_[i] = kOutcomeBad;
          next.push_back(Frontier{id, std::move(bucket)});
        }
      }
      CensusNode& p = c.nodes_[static_cast<std::size_t>(f.node)];
      p.first_child = first;
      p.child_count = static_cast<int>(symbols.size());
    }
    stats.visited = stats.kept + stats.pruned;

    if (with_covers && stats.kept <= opts.cover_word_limit && k + 1 <= opts.cover_depth_limit) {
      double v = 0.0;
      for (int id : kept_nodes) v += pullback_cover(map, c.word(id), opts.cover_base, opts.cover_level).occupied_volume();
      stats.cover_volume = v;
    }
    c.levels_.push_back(stats);
    c.completed_depth_ = k + 1;
    frontier = std::move(next);

    if (stats.kept > opts.max_kept && k + 1 < n) {
      c.truncated_ = true;
      break;
    }
    if (frontier.empty() || k + 1 == n) {
      // Deeper levels are empty; record them so every depth has stats.
      for (int j = k + 2; j <= n; ++j) {
        DepthStats z;
        z.depth = j;
        z.cover_volume = 0.0;
        c.levels_.push_back(z);
      }
      c.completed_depth_ = n;
      break;
    }

    active.clear();
    for (const Frontier& f : frontier) active.insert(active.end(), f.samples.begin(), f.samples.end());
    geometry::parallel_blocks(active.size(), jobs, [&](std::size_t b, std::size_t e, unsigned) {
      for (std::size_t a = b; a < e; ++a) cur[active[a]] = map.forward(cur[active[a]]);
    });
  }
  return c;
}

BadVolume bad_volume(const Census& census, int k) {
  if (k < 1 || k > census.depth()) throw std::out_of_range("bad_volume: depth outside the census");
  BadVolume bv;
  bv.n = k;
  bv.samples = census.samples();
  int at = k;
  if (k > census.completed_depth()) {
    bv.truncated = true;
    at = census.completed_depth();
  }
  const DepthStats& s = census.levels()[static_cast<std::size_t>(at - 1)];
  bv.kept = s.kept;
  bv.pruned = s.pruned;
  bv.visited = s.visited;
  bv.hits = s.hits;
  if (s.kept == 0) {
    bv.exact_zero = true;
    return bv;
  }
  const geometry::Interval iv = geometry::binomial_interval(s.hits, bv.samples);
  bv.estimate = static_cast<double>(s.hits) / static_cast<double>(bv.samples);
  bv.vol_hi = iv.hi;
  if (s.cover_volume >= 0.0) bv.vol_hi = std::min(bv.vol_hi, s.cover_volume);
  bv.vol_lo = bv.truncated ? 0.0 : std::min(iv.lo, bv.vol_hi);
  if (bv.truncated) bv.estimate = std::min(bv.estimate, bv.vol_hi);
  return bv;
}

BadVolume bad_volume(const MapWithHoles& map, int n, double threshold, const CensusOptions& opts) {
  return bad_volume(run_census(map, n, threshold, opts), n);
}

SnPartition sn_partition(const Census& census) {
  SnPartition p;
  p.truncated = census.truncated();
  const int n = census.depth();
  p.sets.resize(static_cast<std::size_t>(n));
  p.witness_counts.assign(static_cast<std::size_t>(n), 0);
  bool prefix_free = true;
  std::size_t assigned = 0;
  const auto& nodes = census.nodes();
  for (std::size_t v = 1; v < nodes.size(); ++v) {
    const CensusNode& node = nodes[v];
    if (node.status != NodeStatus::pruned) continue;
    if (node.child_count != 0) prefix_free = false;
    const auto k = static_cast<std::size_t>(node.depth - 1);
    p.sets[k].push_back(census.word(static_cast<int>(v)));
    p.witness_counts[k] += node.hits;
  }
  for (int o : census.outcomes())
    if (o >= 1) ++assigned;
  std::size_t counted = 0;
  for (std::size_t w : p.witness_counts) counted += w;
  p.disjoint = prefix_free && counted == assigned;
  return p;
}

std::vector<bounds::MeasuredCell> q_census(const MapWithHoles& map, int n, double threshold,
                                           const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("q_census: n must be >= 1");
  const int m1 = map.branch_count();
  double min_floor = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m1; ++k) min_floor = std::min(min_floor, map.expansion_floor(k));
  const double budget = threshold * n;
  const PrunePredicate prune = [=](int depth, double sum) {
    return sum + static_cast<double>(n - depth) * min_floor > budget;
  };
  const Census c = CensusBuilder::enumerate(map, n, threshold, opts, prune, false);
  if (c.truncated()) throw std::runtime_error("q_census: word cap exceeded before depth n");

  const auto degenerate = map.degenerate_branch();
  std::map<std::pair<int, int>, bounds::MeasuredCell> cells;
  const auto& nodes = c.nodes();
  for (std::size_t v = 1; v < nodes.size(); ++v) {
    const CensusNode& node = nodes[v];
    if (node.depth != n || node.status != NodeStatus::kept) continue;
    const CylinderWord w = c.word(static_cast<int>(v));
    int l = 0, t = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (degenerate && w[i] == *degenerate) {
        ++l;
        if (i == 0 || w[i - 1] != *degenerate) ++t;
      }
    }
    auto& cell = cells[{l, t}];
    cell.l = l;
    cell.t = t;
    cell.volume += static_cast<double>(node.hits);
    ++cell.words;
  }
  std::vector<bounds::MeasuredCell> out;
  const auto N = static_cast<double>(c.samples());
  for (auto& [key, cell] : cells) {
    const auto hits = static_cast<std::size_t>(cell.volume);
    cell.volume = static_cast<double>(hits) / N;
    cell.volume_hi = geometry::binomial_interval(hits, c.samples()).hi;
    out.push_back(cell);
  }
  return out;
}

}  // namespace repeller::holes
