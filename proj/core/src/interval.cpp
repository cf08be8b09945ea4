#include "intsel/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace intsel {

Interval Interval::make(IntervalId id, double start, double finish) {
  if (!(start < finish) || !std::isfinite(start) || !std::isfinite(finish)) {
    throw std::invalid_argument("interval " + std::to_string(id) +
                                " must satisfy start < finish with finite endpoints");
  }
  return Interval{id, start, finish};
}

std::string_view to_string(WeightModel model) {
  return model == WeightModel::Unit ? "unit" : "proportional";
}

WeightModel parse_weight_model(std::string_view text) {
  if (text == "unit") return WeightModel::Unit;
  if (text == "proportional") return WeightModel::Proportional;
  throw std::invalid_argument("unknown weight model '" + std::string(text) + "'");
}

Instance::Instance(std::vector<Interval> intervals, WeightModel model)
    : intervals_(std::move(intervals)), model_(model) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const Interval& iv = intervals_[i];
    if (iv.id != i) {
      throw std::invalid_argument("instance ids must be dense: position " + std::to_string(i) +
                                  " holds id " + std::to_string(iv.id));
    }
    // Re-validate geometry; callers may have built the struct directly.
    Interval::make(iv.id, iv.start, iv.finish);
  }
}

Instance Instance::from_spans(std::span<const std::pair<double, double>> spans,
                              WeightModel model) {
  std::vector<Interval> intervals;
  intervals.reserve(spans.size());
  for (const auto& [s, f] : spans) {
    intervals.push_back(Interval::make(static_cast<IntervalId>(intervals.size()), s, f));
  }
  return Instance(std::move(intervals), model);
}

Instance Instance::with_weight_model(WeightModel model) const {
  Instance copy = *this;
  copy.model_ = model;
  return copy;
}

std::string_view to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::Disjoint: return "disjoint";
    case ConflictKind::Partial: return "partial";
    case ConflictKind::NewSubsumesOld: return "new-subsumes-old";
    case ConflictKind::OldSubsumesNew: return "old-subsumes-new";
    case ConflictKind::Equal: return "equal";
  }
  return "?";
}

ConflictKind classify_conflict(const Interval& existing, const Interval& incoming) {
  if (!conflicts(existing, incoming)) return ConflictKind::Disjoint;
  if (existing.start == incoming.start && existing.finish == incoming.finish) {
    return ConflictKind::Equal;
  }
  if (existing.start <= incoming.start && incoming.finish <= existing.finish) {
    return ConflictKind::OldSubsumesNew;
  }
  if (incoming.start <= existing.start && existing.finish <= incoming.finish) {
    return ConflictKind::NewSubsumesOld;
  }
  return ConflictKind::Partial;
}

std::size_t distinct_lengths(const Instance& instance) {
  std::vector<double> lengths;
  lengths.reserve(instance.size());
  for (const Interval& iv : instance.intervals()) lengths.push_back(iv.length());
  std::sort(lengths.begin(), lengths.end());
  return static_cast<std::size_t>(std::unique(lengths.begin(), lengths.end()) - lengths.begin());
}

}  // namespace intsel
