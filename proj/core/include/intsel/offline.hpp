#pragma once

#include <stdexcept>
#include <vector>

#include "intsel/interval.hpp"

namespace intsel {

// One fixed optimal solution. Predictions and error are always measured
// against this set, so the members must not depend on anything but the
// instance itself.
struct CanonicalSolution {
  std::vector<IntervalId> member_ids;  // sorted ascending
  double value = 0.0;                  // sum of member weights, in id order

  bool contains(IntervalId id) const;
};

class SizeGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBruteForceMaxSize = 20;

// Earliest-finish greedy. Requires a unit-weight instance.
CanonicalSolution opt_unit(const Instance& instance);

// Weighted interval scheduling DP with predecessor binary search. Ties in the
// backtrack exclude the current interval.
CanonicalSolution opt_weighted(const Instance& instance);

// opt_unit for unit instances, opt_weighted otherwise.
CanonicalSolution canonical_opt(const Instance& instance);

// Maximum over all pairwise-disjoint subsets. Throws SizeGuardError for
// instances larger than kBruteForceMaxSize.
double brute_force_opt(const Instance& instance);

}  // namespace intsel
