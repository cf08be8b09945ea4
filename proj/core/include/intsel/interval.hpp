#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intsel {

using IntervalId = std::uint32_t;

// Half-open segment [start, finish) on the real line. `id` is the dense index
// of the interval inside its Instance.
struct Interval {
  IntervalId id = 0;
  double start = 0.0;
  double finish = 0.0;

  // Throws std::invalid_argument unless start < finish (NaN also rejected).
  static Interval make(IntervalId id, double start, double finish);

  double length() const { return finish - start; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class WeightModel { Unit, Proportional };

std::string_view to_string(WeightModel model);
// Accepts "unit" and "proportional"; throws std::invalid_argument otherwise.
WeightModel parse_weight_model(std::string_view text);

inline double weight(const Interval& interval, WeightModel model) {
  return model == WeightModel::Unit ? 1.0 : interval.finish - interval.start;
}

// An immutable set of intervals. Index order is the canonical identity and has
// nothing to do with the order in which a policy sees the intervals.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<Interval> intervals, WeightModel model);

  // Assigns ids 0..n-1 in the given order.
  static Instance from_spans(std::span<const std::pair<double, double>> spans,
                             WeightModel model);

  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  WeightModel weight_model() const { return model_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Interval& operator[](IntervalId id) const { return intervals_[id]; }
  double weight_of(IntervalId id) const { return weight(intervals_[id], model_); }

  // Same geometry under another weight model.
  Instance with_weight_model(WeightModel model) const;

 private:
  std::vector<Interval> intervals_;
  WeightModel model_ = WeightModel::Unit;
};

enum class ConflictKind { Disjoint, Partial, NewSubsumesOld, OldSubsumesNew, Equal };

std::string_view to_string(ConflictKind kind);

inline bool conflicts(const Interval& a, const Interval& b) {
  return a.start < b.finish && b.start < a.finish;
}

// Classification is relative to an interval already held (`existing`) and an
// arriving one (`incoming`). Equal is a containment-type conflict but never a
// proper inclusion.
ConflictKind classify_conflict(const Interval& existing, const Interval& incoming);

// Number of distinct finish - start values.
std::size_t distinct_lengths(const Instance& instance);

}  // namespace intsel
