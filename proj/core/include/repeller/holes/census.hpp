#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "repeller/bounds/volume_chain.hpp"
#include "repeller/holes/cylinder.hpp"

namespace repeller::holes {

struct CensusOptions {
  /// Stratified samples; rounded down to a perfect d-th power.
  std::size_t samples = 200000;
  std::uint64_t seed = 1;
  /// Enumeration stops once more words than this are kept at one depth.
  std::size_t max_kept = 1000000;
  bool outer_covers = true;
  int cover_base = 2;
  int cover_level = 7;
  std::size_t cover_word_limit = 64;
  int cover_depth_limit = 16;
  unsigned jobs = 1;
};

enum class NodeStatus : std::uint8_t { kept, pruned };

struct CensusNode {
  int parent = -1;
  int symbol = -1;
  int depth = 0;
  NodeStatus status = NodeStatus::kept;
  double term = 0.0;
  double phi = 0.0;
  std::size_t hits = 0;
  /// Children are stored contiguously in symbol order.
  int first_child = -1;
  int child_count = 0;
};

struct DepthStats {
  int depth = 0;
  std::size_t kept = 0;
  std::size_t pruned = 0;
  std::size_t visited = 0;
  /// Samples whose orbit lies in a kept word of this depth.
  std::size_t hits = 0;
  /// Summed outer-cover volume of the kept words; negative when not computed.
  double cover_volume = -1.0;
};

/// Per-sample classification.
inline constexpr int kOutcomeHole = 0;
inline constexpr int kOutcomeBad = -1;
inline constexpr int kOutcomeUnknown = -2;

/// Breadth-first cylinder enumeration to depth n. A word is pruned as soon as
/// phi_j exceeds the threshold; its samples then have return time j. Kept
/// words at depth n make up B_n.
class Census {
 public:
  int depth() const noexcept { return depth_; }
  int completed_depth() const noexcept { return completed_depth_; }
  bool truncated() const noexcept { return truncated_; }
  double threshold() const noexcept { return threshold_; }
  int branch_count() const noexcept { return branch_count_; }
  std::size_t samples() const noexcept { return outcomes_.size(); }

  const std::vector<CensusNode>& nodes() const noexcept { return nodes_; }
  /// Entry k-1 describes depth k.
  const std::vector<DepthStats>& levels() const noexcept { return levels_; }
  /// Return time in [1, n], or kOutcomeHole / kOutcomeBad / kOutcomeUnknown.
  const std::vector<int>& outcomes() const noexcept { return outcomes_; }
  const std::vector<TorusPoint>& starts() const noexcept { return starts_; }

  std::size_t kept_total() const noexcept;
  std::size_t pruned_total() const noexcept;
  std::size_t visited_total() const noexcept;

  CylinderWord word(int node) const;
  /// Child of `node` with the given symbol, or -1.
  int child(int node, int symbol) const noexcept;
  /// Classifies an arbitrary point by walking the trie along its orbit.
  int classify(const MapWithHoles& map, const TorusPoint& x) const;

  friend struct CensusBuilder;

 private:
  int depth_ = 0;
  int completed_depth_ = 0;
  bool truncated_ = false;
  double threshold_ = 0.0;
  int branch_count_ = 0;
  std::vector<CensusNode> nodes_;  // node 0 is the empty word
  std::vector<DepthStats> levels_;
  std::vector<int> outcomes_;
  std::vector<TorusPoint> starts_;
};

Census run_census(const MapWithHoles& map, int n, double threshold, const CensusOptions& opts = {});

struct BadVolume {
  int n = 0;
  std::size_t kept = 0, pruned = 0, visited = 0;
  std::size_t hits = 0, samples = 0;
  double estimate = 0.0;
  double vol_lo = 0.0;
  double vol_hi = 0.0;  // 99% level
  bool exact_zero = false;
  bool truncated = false;
};

/// Leb(B_k) for k <= census depth.
BadVolume bad_volume(const Census& census, int k);
BadVolume bad_volume(const MapWithHoles& map, int n, double threshold, const CensusOptions& opts = {});

struct SnPartition {
  /// sets[k]: the (k+1)-words pruned at depth k+1.
  std::vector<std::vector<CylinderWord>> sets;
  std::vector<std::size_t> witness_counts;
  /// No word of one set is a prefix of a word in another and every sample
  /// is assigned to at most one set.
  bool disjoint = false;
  bool truncated = false;
};

SnPartition sn_partition(const Census& census);

/// Cells (l, t) of Q_{mu,n}: words with phi_n <= threshold grouped by the
/// number l of visits to the degenerate branch and the number t of runs of
/// such visits. Volumes come from the census samples at depth n.
std::vector<bounds::MeasuredCell> q_census(const MapWithHoles& map, int n, double threshold,
                                           const CensusOptions& opts = {});

}  // namespace repeller::holes
