#pragma once

#include <cstddef>
#include <cstdint>

#include "repeller/families/model.hpp"
#include "repeller/geometry/box_count.hpp"

namespace repeller::families {

struct EscapeResult {
  bool survives = true;
  std::size_t steps = 0;  // iterations performed (entry step when captured)
};

/// Iterates up to `horizon` steps; stops at the first entry into `trap`.
EscapeResult escape_time(const SteppableModel& model, const TorusPoint& x, std::size_t horizon,
                         const geometry::Region& trap);

/// Survival predicate for escape covers (always true when the model has no trap).
geometry::SurvivalTest survival_test(const SteppableModel& model, std::size_t horizon);

struct TrapInvariance {
  bool verified = false;
  std::size_t samples = 0;
  std::size_t failures = 0;
};

/// Samples points near the trap boundary and checks that their images stay in it.
TrapInvariance check_trap_invariance(const SteppableModel& model, std::size_t samples, std::uint64_t seed);

}  // namespace repeller::families
