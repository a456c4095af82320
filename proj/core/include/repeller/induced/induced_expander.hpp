#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <json.hpp>

#include "repeller/geometry/lebesgue.hpp"
#include "repeller/geometry/region.hpp"
#include "repeller/holes/census.hpp"

namespace repeller::induced {

using geometry::TorusPoint;

/// F_n(x) = f^(k+1)(x) on S_k, for k < n. Everything else is the hole of F_n.
/// Return times come from the census trie, so S_k membership has a single source.
class InducedExpander {
 public:
  static InducedExpander build(const holes::MapWithHoles& map, int n, double threshold,
                               const holes::CensusOptions& opts = {});

  const holes::MapWithHoles& base() const noexcept { return *map_; }
  int depth() const noexcept { return census_->depth(); }
  double threshold() const noexcept { return census_->threshold(); }
  const holes::Census& census() const noexcept { return *census_; }
  const holes::SnPartition& s_sets() const noexcept { return partition_; }
  /// True when no sample landed in the domain; the object stays usable.
  bool degenerate() const noexcept { return degenerate_; }

  /// k + 1 for x in S_k, 0 for x in the hole of F_n.
  int return_time(const TorusPoint& x) const;

  struct Evaluation {
    bool in_hole = true;
    int return_time = 0;
    TorusPoint image;
  };
  Evaluation evaluate(const TorusPoint& x) const;

  /// H_{F_n} as a membership region.
  geometry::Region hole() const;

  /// Census samples per return time; entry j counts return time j (entry 0: hole).
  std::vector<std::size_t> return_time_histogram() const;

 private:
  const holes::MapWithHoles* map_ = nullptr;
  std::shared_ptr<const holes::Census> census_;
  holes::SnPartition partition_;
  bool degenerate_ = false;
};

struct ExpansionCheck {
  int n = 0;
  double threshold = 0.0;
  std::size_t samples = 0;
  std::size_t domain_samples = 0;
  /// min over domain samples of log sigma_min(DF_n(x)) - threshold * j.
  double min_margin = 0.0;
  TorusPoint worst_point;
  int worst_return_time = 0;
  bool pass = false;
};

/// Checks ||DF_n^-1(F_n x)|| <= e^(-threshold j) on uniformly sampled points.
ExpansionCheck verify_expansion(const InducedExpander& F, std::size_t samples, std::uint64_t seed, unsigned jobs = 1);

struct HoleVolume {
  geometry::MeasureEstimate measured;
  double delta = 0.0;
  /// delta(n, .) + mu_f + mu_f sum_{j=1}^{n-1} S^j (m+1)^j; may overflow to +inf.
  double bound = 0.0;
  double log_bound = 0.0;
  bool pass = false;
};

HoleVolume induced_hole_volume(const InducedExpander& F, std::size_t samples, std::uint64_t seed);

/// Smallest n with delta(n, mu) < mu_f.
int choose_n0(double mu, double mu_f, int n_limit = 1 << 20);

nlohmann::ordered_json to_json(const ExpansionCheck& e, const HoleVolume& h);

}  // namespace repeller::induced
