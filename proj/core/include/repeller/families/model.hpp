#pragma once

#include <string>

#include "repeller/geometry/region.hpp"
#include "repeller/geometry/torus.hpp"

namespace repeller::families {

using geometry::TorusPoint;

/// A map on T^d that can be iterated for escape-time experiments.
class SteppableModel {
 public:
  virtual ~SteppableModel() = default;
  virtual std::string name() const = 0;
  virtual int dimension() const = 0;
  virtual TorusPoint step(const TorusPoint& x) const = 0;
  /// Forward-invariant region inside the basin of the attractor.
  virtual geometry::Region trap_region() const = 0;
  virtual bool has_trap() const = 0;
};

}  // namespace repeller::families
