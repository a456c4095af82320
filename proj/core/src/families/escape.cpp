#include "repeller/families/escape.hpp"

#include <cmath>
#include <memory>

#include "repeller/geometry/rng.hpp"

namespace repeller::families {

EscapeResult escape_time(const SteppableModel& model, const TorusPoint& x, std::size_t horizon,
                         const geometry::Region& trap) {
  TorusPoint p = x;
  if (trap.contains(p)) return {false, 0};
  for (std::size_t n = 1; n <= horizon; ++n) {
    p = model.step(p);
    if (trap.contains(p)) return {false, n};
  }
  return {true, horizon};
}

geometry::SurvivalTest survival_test(const SteppableModel& model, std::size_t horizon) {
  if (!model.has_trap()) return [](const TorusPoint&) { return true; };
  auto trap = std::make_shared<geometry::Region>(model.trap_region());
  return [&model, horizon, trap](const TorusPoint& x) { return escape_time(model, x, horizon, *trap).survives; };
}

TrapInvariance check_trap_invariance(const SteppableModel& model, std::size_t samples, std::uint64_t seed) {
  TrapInvariance out;
  if (!model.has_trap()) {
    out.verified = true;
    return out;
  }
  const geometry::Region trap = model.trap_region();
  const geometry::Box& box = trap.bbox();
  const int d = trap.dim();
  geometry::Rng rng(seed, 0x7a9);
  auto draw = [&] {
    std::array<double, geometry::kMaxDim> x{};
    for (int i = 0; i < d; ++i) {
      const auto k = static_cast<std::size_t>(i);
      x[k] = rng.uniform(box.lo[k], box.hi[k]);
    }
    return x;
  };
  std::size_t attempts = 0;
  while (out.samples < samples && attempts < 1000 * samples) {
    ++attempts;
    // An inside point and an outside point of the bounding box; bisect to the boundary.
    auto a = draw();
    if (!trap.contains(TorusPoint::wrapped(a, d))) continue;
    auto b = draw();
    if (trap.contains(TorusPoint::wrapped(b, d))) continue;
    for (int it = 0; it < 50; ++it) {
      std::array<double, geometry::kMaxDim> m{};
      for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] = 0.5 * (a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
      if (trap.contains(TorusPoint::wrapped(m, d)))
        a = m;
      else
        b = m;
    }
    ++out.samples;
    if (!trap.contains(model.step(TorusPoint::wrapped(a, d)))) ++out.failures;
  }
  out.verified = out.samples == samples && out.failures == 0;
  return out;
}

}  // namespace repeller::families
