#include "intsel/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "intsel/random.hpp"

namespace intsel {

namespace {

void check_length(const Instance& instance, const PredictionVector& preds) {
  if (preds.size() != instance.size()) {
    throw std::invalid_argument("prediction vector has " + std::to_string(preds.size()) +
                                " entries for an instance of " +
                                std::to_string(instance.size()) + " intervals");
  }
}

// Cost of predicting 1 for a non-optimal interval. Against a true optimum the
// conflicting optimal weight is never below w(I) (swap argument); a tiny
// negative value can only be rounding from real-valued weights.
double false_positive_cost(const Interval& iv, const SolutionState& opt_members,
                           WeightModel model) {
  double conflicting = 0.0;
  std::vector<Interval> hits;
  opt_members.collect_conflicts(iv, hits);
  if (hits.empty()) {
    throw std::logic_error("interval " + std::to_string(iv.id) +
                           " conflicts with no optimal interval; solution is not optimal");
  }
  for (const Interval& j : hits) conflicting += weight(j, model);
  const double cost = conflicting - weight(iv, model);
  if (cost < 0.0) {
    if (cost < -1e-9 * std::max(1.0, conflicting)) {
      throw std::logic_error("negative error for interval " + std::to_string(iv.id) +
                             "; solution is not optimal");
    }
    return 0.0;
  }
  return cost;
}

SolutionState opt_structure(const Instance& instance, const CanonicalSolution& opt) {
  SolutionState members(instance.weight_model());
  for (IntervalId id : opt.member_ids) {
    if (id >= instance.size()) {
      throw std::invalid_argument("optimal solution references id " + std::to_string(id) +
                                  " outside the instance");
    }
    members.insert(instance[id]);
  }
  return members;
}

}  // namespace

PredictionVector::PredictionVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t& b : bits_) {
    if (b > 1) throw std::invalid_argument("prediction bits must be 0 or 1");
  }
}

PredictionVector PredictionVector::complement() const {
  PredictionVector out = *this;
  for (std::uint8_t& b : out.bits_) b ^= 1;
  return out;
}

PredictionVector perfect_predictions(const Instance& instance, const CanonicalSolution& opt) {
  PredictionVector preds(instance.size());
  for (IntervalId id : opt.member_ids) {
    if (id >= instance.size()) {
      throw std::invalid_argument("optimal solution references id " + std::to_string(id) +
                                  " outside the instance");
    }
    preds.set(id, true);
  }
  return preds;
}

ErrorModel::ErrorModel(const Instance& instance, const CanonicalSolution& opt)
    : perfect_(perfect_predictions(instance, opt)), flip_cost_(instance.size(), 0.0) {
  const SolutionState members = opt_structure(instance, opt);
  for (const Interval& iv : instance.intervals()) {
    flip_cost_[iv.id] = perfect_[iv.id]
                            ? instance.weight_of(iv.id)
                            : false_positive_cost(iv, members, instance.weight_model());
  }
  for (double c : flip_cost_) max_error_ += c;
}

ErrorReport ErrorModel::evaluate(const PredictionVector& preds) const {
  if (preds.size() != perfect_.size()) {
    throw std::invalid_argument("prediction vector has " + std::to_string(preds.size()) +
                                " entries, expected " + std::to_string(perfect_.size()));
  }
  ErrorReport report;
  report.per_interval.assign(preds.size(), 0.0);
  for (IntervalId id = 0; id < preds.size(); ++id) {
    if (preds[id] != perfect_[id]) report.per_interval[id] = flip_cost_[id];
    report.total += report.per_interval[id];
  }
  report.max_possible = max_error_;
  return report;
}

std::pair<PredictionVector, ErrorReport> ErrorModel::corrupt(double target_fraction,
                                                             std::uint64_t seed) const {
  if (!(target_fraction >= 0.0 && target_fraction <= 1.0)) {
    throw std::invalid_argument("target error fraction must lie in [0, 1]");
  }
  PredictionVector preds = perfect_;
  if (target_fraction == 1.0) {
    preds = perfect_.complement();
  } else {
    const double target = target_fraction * max_error_;
    const std::vector<std::uint32_t> order = random_permutation(preds.size(), seed);
    double running = 0.0;
    for (std::uint32_t id : order) {
      if (running >= target) break;
      preds.flip(id);
      running += flip_cost_[id];
    }
  }
  ErrorReport report = evaluate(preds);
  return {std::move(preds), std::move(report)};
}

double interval_error(const Instance& instance, IntervalId id, const PredictionVector& preds,
                      const CanonicalSolution& opt) {
  check_length(instance, preds);
  const bool optimal = opt.contains(id);
  if (preds[id] == optimal) return 0.0;
  if (optimal) return instance.weight_of(id);
  return false_positive_cost(instance[id], opt_structure(instance, opt),
                             instance.weight_model());
}

ErrorReport total_error(const Instance& instance, const PredictionVector& preds,
                        const CanonicalSolution& opt) {
  check_length(instance, preds);
  return ErrorModel(instance, opt).evaluate(preds);
}

std::pair<PredictionVector, ErrorReport> corrupt(const PredictionVector& preds,
                                                 const Instance& instance,
                                                 const CanonicalSolution& opt,
                                                 double target_fraction, std::uint64_t seed) {
  ErrorModel model(instance, opt);
  if (!(preds == model.perfect())) {
    throw std::invalid_argument("corrupt expects the perfect prediction vector");
  }
  return model.corrupt(target_fraction, seed);
}

}  // namespace intsel
