#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "intsel/interval.hpp"
#include "intsel/predictions.hpp"

namespace intsel {

// A tight lower-bound instance together with the values its construction
// forces. Keys of `expected`: "opt", "eta", and "alg:<algorithm>" for each
// policy whose outcome is fixed by the construction.
struct AdversarialFixture {
  std::string name;
  Instance instance;
  std::vector<std::uint32_t> arrival_order;
  PredictionVector preds;
  std::map<std::string, double> expected;
};

// Which branch of the adaptive adversary was taken: the algorithm accepted the
// first interval (the full gadget arrives) or rejected it (input stops).
enum class Branch { Accept, Reject };

// Unit weights. Per copy at offset t = 20 c: I_big = [t, t+16) with Prd 0,
// I_1 = [t+2, t+7) with Prd 0, I_2 = [t+8, t+13) with Prd 1.
// Throws std::invalid_argument for copies < 1.
AdversarialFixture gen_theorem2(int copies, Branch branch = Branch::Accept);

// Proportional weights, base weight w. Per copy at offset t = c (3w + 1):
// I_1 = [t + w/2, t + 3w/2) with Prd 0, I_2 = [t, t+w) with Prd 1,
// I_3 = [t+w, t+3w) with Prd 0. I_2 and I_3 touch, so they are disjoint and
// each partially overlaps I_1.
AdversarialFixture gen_theorem4(int copies, double base_weight, Branch branch = Branch::Accept);

// Proportional weights. I_1 = [0, w); I_2 and I_3 overlap I_1 by eps on the
// left and right with weight alpha w - eps; I_4 = [eps, w - eps) sits inside
// I_1 between them. Predictions are perfect. Any alpha-increasing policy keeps
// only I_1 while OPT = {I_2, I_3, I_4} = (2 alpha + 1) w - 4 eps.
AdversarialFixture gen_alpha_lb(double alpha, double eps, double base_weight = 10.0);

}  // namespace intsel
