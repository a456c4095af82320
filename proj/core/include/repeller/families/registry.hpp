#pragma once

#include <memory>
#include <string>
#include <vector>

#include "repeller/families/model.hpp"
#include "repeller/holes/map_with_holes.hpp"

namespace repeller::families {

/// Parameters common to every family; fields irrelevant to a family are ignored.
/// Negative values of delta0/delta1/sigma1 select the family default.
struct FamilySpec {
  std::string family = "hopf2d";
  double mu = 0.05;
  double delta0 = -1.0;
  double delta1 = -1.0;
  double sigma1 = -1.0;
  double sigma = -1.0;
  double trap_fraction = 0.5;
};

const std::vector<std::string>& family_names();
bool has_symbolic_map(const std::string& family);

std::unique_ptr<SteppableModel> make_model(const FamilySpec& spec);
/// Throws std::invalid_argument for families without branch structure (hopf3d).
std::unique_ptr<holes::MapWithHoles> make_map(const FamilySpec& spec);

/// c0 such that c0 mu_f is the expansion threshold of the family: K/256 with
/// K = delta_parameter / mu_f (the closed-form infimum for hopf2d).
double threshold_constant(const FamilySpec& spec);

}  // namespace repeller::families
