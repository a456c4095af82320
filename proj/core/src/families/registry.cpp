#include "repeller/families/registry.hpp"

#include <stdexcept>

#include "repeller/families/diaz_viana.hpp"
#include "repeller/families/hopf2d.hpp"
#include "repeller/families/hopf3d.hpp"
#include "repeller/families/toys.hpp"

namespace repeller::families {

namespace {

double pick(double v, double fallback) { return v < 0.0 ? fallback : v; }

Hopf2DParams hopf2d(const FamilySpec& s) {
  Hopf2DParams p;
  p.mu = s.mu;
  p.delta0 = pick(s.delta0, p.delta0);
  p.delta1 = pick(s.delta1, p.delta1);
  p.sigma1 = pick(s.sigma1, p.sigma1);
  p.trap_fraction = s.trap_fraction;
  return p;
}

Hopf3DParams hopf3d(const FamilySpec& s) {
  Hopf3DParams p;
  p.mu = s.mu;
  p.delta0 = pick(s.delta0, p.delta0);
  p.delta1 = pick(s.delta1, p.delta1);
  p.sigma1 = pick(s.sigma1, p.sigma1);
  p.trap_fraction = s.trap_fraction;
  return p;
}

DiazVianaParams diaz_viana(const FamilySpec& s) {
  DiazVianaParams p;
  p.t = s.mu;
  p.sigma = pick(s.sigma, p.sigma);
  p.delta0 = pick(s.delta0, p.delta0);
  p.delta1 = pick(s.delta1, p.delta1);
  p.sigma1 = pick(s.sigma1, p.sigma1);
  return p;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"hopf2d", "hopf3d", "tripling", "linear2d", "diaz-viana"};
  return names;
}

bool has_symbolic_map(const std::string& family) { return family != "hopf3d"; }

std::unique_ptr<SteppableModel> make_model(const FamilySpec& spec) {
  if (spec.family == "hopf2d") return std::make_unique<HopfModel2D>(hopf2d(spec));
  if (spec.family == "hopf3d") return std::make_unique<HopfModel3D>(hopf3d(spec));
  if (spec.family == "tripling") return std::make_unique<TriplingToy>();
  if (spec.family == "linear2d") return std::make_unique<LinearTorus2D>();
  if (spec.family == "diaz-viana") return std::make_unique<DiazVianaFamily>(diaz_viana(spec));
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

std::unique_ptr<holes::MapWithHoles> make_map(const FamilySpec& spec) {
  if (spec.family == "hopf2d") return std::make_unique<HopfModel2D>(hopf2d(spec));
  if (spec.family == "tripling") return std::make_unique<TriplingToy>();
  if (spec.family == "linear2d") return std::make_unique<LinearTorus2D>();
  if (spec.family == "diaz-viana") return std::make_unique<DiazVianaFamily>(diaz_viana(spec));
  if (spec.family == "hopf3d") throw std::invalid_argument("hopf3d has no symbolic branch structure");
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

double threshold_constant(const FamilySpec& spec) {
  if (spec.family == "hopf2d") return HopfModel2D(hopf2d(spec)).c0();
  if (spec.family == "diaz-viana") {
    const DiazVianaFamily f(diaz_viana(spec));
    return f.hole_volume() > 0.0 ? f.K_t() / 256.0 : 0.0;
  }
  if (spec.family == "tripling" || spec.family == "linear2d") return 1.0 / 256.0;
  if (spec.family == "hopf3d") throw std::invalid_argument("hopf3d has no symbolic branch structure");
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

}  // namespace repeller::families
