#pragma once

#include <string>
#include <vector>

#include "intsel/policies.hpp"

namespace intsel {

// Relative slack allowed on every bound.
inline constexpr double kBoundTolerance = 1e-9;

struct BoundCheck {
  std::string name;     // e.g. "alg>=opt-eta", "ratio<=2k+1"
  double limit = 0.0;   // ratio limit, or the required minimum ALG
  bool holds = true;
  bool conjecture = false;  // reported, never a failure
};

struct RunOutcome {
  double alg = 0.0;
  double opt = 0.0;
  double eta = 0.0;
  std::size_t distinct_lengths = 0;
};

// OPT/ALG, with 0/0 = 1 and x/0 = inf.
double competitive_ratio(double opt, double alg);

// Worst-case guarantees that apply to `config` on an instance with the given
// weight model:
//   Naive                 ALG >= OPT - eta
//   Revoke-Unit (unit)    ALG >= OPT - eta, OPT/ALG <= 2k+1 (3k without mark inheritance)
//   BK2K (unit)           OPT/ALG <= 2k
//   LR (beta >= phi)      OPT/ALG <= 2 beta + 1
//   LR' (beta >= phi)     OPT/ALG <= 2 beta + 1, conjecture only
//   Revoke-Proportional   OPT/ALG <= (4 l^2 + 2 l)/(l - 1); 3 l/(l - 1) when eta = 0
std::vector<BoundCheck> check_bounds(const PolicyConfig& config, WeightModel model,
                                     const RunOutcome& outcome);

}  // namespace intsel
