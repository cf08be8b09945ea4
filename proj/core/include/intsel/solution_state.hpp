#pragma once

#include <map>
#include <span>
#include <vector>

#include "intsel/interval.hpp"

namespace intsel {

// A set of pairwise-disjoint intervals ordered by start. Because members never
// overlap, their finishes are ordered the same way, so the members overlapping
// any query form one contiguous run of keys.
class SolutionState {
 public:
  explicit SolutionState(WeightModel model = WeightModel::Unit) : model_(model) {}

  WeightModel weight_model() const { return model_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  // Sum of member weights in start order; O(n).
  double total_weight() const;

  bool contains(const Interval& interval) const;

  // Members overlapping `query`, in increasing start order.
  // O(log n + |result|).
  std::vector<Interval> conflict_set(const Interval& query) const;
  // Same as conflict_set but reuses `out` (cleared first).
  void collect_conflicts(const Interval& query, std::vector<Interval>& out) const;

  // Precondition: `interval` conflicts with no member. Throws std::logic_error
  // otherwise.
  void insert(const Interval& interval);
  // Throws std::logic_error if `interval` is not a member.
  void erase(const Interval& interval);
  // Erases every interval in `displaced`, then inserts `incoming`.
  void replace(std::span<const Interval> displaced, const Interval& incoming);

  std::vector<Interval> members() const;
  std::vector<IntervalId> member_ids() const;

  // Neighbour check over the ordered members; O(n).
  bool is_disjoint() const;

 private:
  WeightModel model_;
  std::map<double, Interval> members_;
};

}  // namespace intsel
