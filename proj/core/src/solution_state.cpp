#include "intsel/solution_state.hpp"

#include <stdexcept>

namespace intsel {

double SolutionState::total_weight() const {
  double total = 0.0;
  for (const auto& [start, iv] : members_) total += weight(iv, model_);
  return total;
}

bool SolutionState::contains(const Interval& interval) const {
  auto it = members_.find(interval.start);
  return it != members_.end() && it->second == interval;
}

std::vector<Interval> SolutionState::conflict_set(const Interval& query) const {
  std::vector<Interval> out;
  collect_conflicts(query, out);
  return out;
}

void SolutionState::collect_conflicts(const Interval& query, std::vector<Interval>& out) const {
  out.clear();
  auto it = members_.lower_bound(query.start);
  // At most one member starting before the query can reach into it.
  if (it != members_.begin()) {
    auto prev = std::prev(it);
    if (prev->second.finish > query.start) out.push_back(prev->second);
  }
  for (; it != members_.end() && it->first < query.finish; ++it) out.push_back(it->second);
}

void SolutionState::insert(const Interval& interval) {
  auto it = members_.lower_bound(interval.start);
  if (it != members_.end() && it->first < interval.finish) {
    throw std::logic_error("insert would overlap interval " + std::to_string(it->second.id));
  }
  if (it != members_.begin() && std::prev(it)->second.finish > interval.start) {
    throw std::logic_error("insert would overlap interval " +
                           std::to_string(std::prev(it)->second.id));
  }
  members_.emplace_hint(it, interval.start, interval);
}

void SolutionState::erase(const Interval& interval) {
  auto it = members_.find(interval.start);
  if (it == members_.end() || !(it->second == interval)) {
    throw std::logic_error("interval " + std::to_string(interval.id) + " is not in the solution");
  }
  members_.erase(it);
}

void SolutionState::replace(std::span<const Interval> displaced, const Interval& incoming) {
  for (const Interval& iv : displaced) erase(iv);
  insert(incoming);
}

std::vector<Interval> SolutionState::members() const {
  std::vector<Interval> out;
  out.reserve(members_.size());
  for (const auto& [start, iv] : members_) out.push_back(iv);
  return out;
}

std::vector<IntervalId> SolutionState::member_ids() const {
  std::vector<IntervalId> out;
  out.reserve(members_.size());
  for (const auto& [start, iv] : members_) out.push_back(iv.id);
  return out;
}

bool SolutionState::is_disjoint() const {
  const Interval* prev = nullptr;
  for (const auto& [start, iv] : members_) {
    if (prev != nullptr && prev->finish > iv.start) return false;
    prev = &iv;
  }
  return true;
}

}  // namespace intsel
