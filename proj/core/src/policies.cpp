#include "intsel/policies.hpp"

#include <algorithm>
#include <stdexcept>

#include "intsel/format.hpp"

namespace intsel {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Naive: return "naive";
    case Algorithm::GrNR: return "grnr";
    case Algorithm::BK2K: return "bk2k";
    case Algorithm::RevokeUnit: return "revoke-unit";
    case Algorithm::LR: return "lr";
    case Algorithm::LRPrime: return "lr-prime";
    case Algorithm::RevokeProportional: return "revoke-prop";
    case Algorithm::RevokePropHalf: return "revoke-prop-half";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::Naive, Algorithm::GrNR, Algorithm::BK2K, Algorithm::RevokeUnit,
                      Algorithm::LR, Algorithm::LRPrime, Algorithm::RevokeProportional,
                      Algorithm::RevokePropHalf}) {
    if (to_string(a) == text) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

std::string_view to_string(DecisionModel model) {
  return model == DecisionModel::Irrevocable ? "irrevocable" : "revocable";
}

DecisionModel parse_decision_model(std::string_view text) {
  if (text == "irrevocable") return DecisionModel::Irrevocable;
  if (text == "revocable") return DecisionModel::Revocable;
  throw std::invalid_argument("unknown decision model '" + std::string(text) + "'");
}

DecisionModel decision_model_of(Algorithm algorithm) {
  return (algorithm == Algorithm::Naive || algorithm == Algorithm::GrNR)
             ? DecisionModel::Irrevocable
             : DecisionModel::Revocable;
}

bool uses_predictions(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Naive:
    case Algorithm::RevokeUnit:
    case Algorithm::RevokeProportional:
    case Algorithm::RevokePropHalf:
      return true;
    default:
      return false;
  }
}

bool requires_proportional(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::LR:
    case Algorithm::LRPrime:
    case Algorithm::RevokeProportional:
    case Algorithm::RevokePropHalf:
      return true;
    default:
      return false;
  }
}

PolicyConfig PolicyConfig::for_algorithm(Algorithm algorithm) {
  PolicyConfig config;
  config.algorithm = algorithm;
  config.prediction_threshold = algorithm == Algorithm::RevokePropHalf ? 0.5 : 1.0;
  return config;
}

void PolicyConfig::validate() const {
  switch (algorithm) {
    case Algorithm::LR:
    case Algorithm::LRPrime:
      if (!(beta >= 1.0)) throw std::invalid_argument("beta must be >= 1");
      break;
    case Algorithm::RevokeProportional:
    case Algorithm::RevokePropHalf:
      if (!(lambda > 1.0)) throw std::invalid_argument("lambda must be > 1");
      if (!(prediction_threshold > 0.0 && prediction_threshold <= 1.0)) {
        throw std::invalid_argument("prediction threshold must lie in (0, 1]");
      }
      break;
    default:
      break;
  }
}

std::string PolicyConfig::parameter_string() const {
  switch (algorithm) {
    case Algorithm::LR:
    case Algorithm::LRPrime:
      return "beta=" + format_double(beta);
    case Algorithm::RevokeProportional:
    case Algorithm::RevokePropHalf:
      return "lambda=" + format_double(lambda) + ";theta=" + format_double(prediction_threshold);
    case Algorithm::RevokeUnit:
      return inherit_marks ? "" : "inherit=0";
    default:
      return "";
  }
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::NoConflict: return "no-conflict";
    case Rule::ProperInclusion: return "proper-inclusion";
    case Rule::Predictions: return "predictions";
    case Rule::MainThreshold: return "main-threshold";
    case Rule::Rejected: return "rejected";
  }
  return "?";
}

PolicyState::PolicyState(WeightModel model, std::size_t n)
    : solution_(model), marked_(n, 0), accepted_prediction_(n, -1), rejected_(n, 0) {}

std::optional<bool> PolicyState::accepted_prediction(IntervalId id) const {
  if (accepted_prediction_[id] < 0) return std::nullopt;
  return accepted_prediction_[id] == 1;
}

void PolicyState::seed_member(const Interval& interval, bool marked,
                              std::optional<bool> prediction) {
  solution_.insert(interval);
  marked_[interval.id] = marked ? 1 : 0;
  accepted_prediction_[interval.id] = prediction ? (*prediction ? 1 : 0) : -1;
}

struct StepAccess {
  static std::vector<Interval>& conflicts(PolicyState& state, const Interval& incoming) {
    if (incoming.id >= state.capacity()) {
      throw std::out_of_range("interval id " + std::to_string(incoming.id) +
                              " exceeds the policy state size");
    }
    if (state.rejected_[incoming.id] != 0 || state.solution_.contains(incoming)) {
      throw std::logic_error("interval " + std::to_string(incoming.id) + " arrived twice");
    }
    state.solution_.collect_conflicts(incoming, state.scratch_);
    return state.scratch_;
  }

  static Decision accept(PolicyState& state, const Interval& incoming, Rule rule) {
    Decision d;
    d.id = incoming.id;
    d.kind = DecisionKind::Accept;
    d.rule = rule;
    d.displaced.reserve(state.scratch_.size());
    for (const Interval& j : state.scratch_) d.displaced.push_back(j.id);
    state.solution_.replace(state.scratch_, incoming);
    return d;
  }

  static Decision reject(PolicyState& state, const Interval& incoming) {
    state.rejected_[incoming.id] = 1;
    Decision d;
    d.id = incoming.id;
    return d;
  }

  static void mark(PolicyState& state, Decision& d) {
    state.marked_[d.id] = 1;
    d.marked = true;
  }

  static bool marked(const PolicyState& state, IntervalId id) { return state.marked_[id] != 0; }

  static void record_prediction(PolicyState& state, IntervalId id, bool prd) {
    state.accepted_prediction_[id] = prd ? 1 : 0;
  }

  static bool predicted_optimal(const PolicyState& state, IntervalId id) {
    return state.accepted_prediction_[id] == 1;
  }
};

namespace {

double sum_weights(const std::vector<Interval>& items, WeightModel model) {
  double total = 0.0;
  for (const Interval& j : items) total += weight(j, model);
  return total;
}

}  // namespace

Decision naive_step(PolicyState& state, const Interval& incoming, bool prd) {
  const auto& hits = StepAccess::conflicts(state, incoming);
  if (prd && hits.empty()) return StepAccess::accept(state, incoming, Rule::NoConflict);
  return StepAccess::reject(state, incoming);
}

Decision greedy_nr_step(PolicyState& state, const Interval& incoming) {
  const auto& hits = StepAccess::conflicts(state, incoming);
  if (hits.empty()) return StepAccess::accept(state, incoming, Rule::NoConflict);
  return StepAccess::reject(state, incoming);
}

Decision bk2k_step(PolicyState& state, const Interval& incoming) {
  const auto& hits = StepAccess::conflicts(state, incoming);
  if (hits.empty()) return StepAccess::accept(state, incoming, Rule::NoConflict);
  if (hits.size() == 1 &&
      classify_conflict(hits.front(), incoming) == ConflictKind::OldSubsumesNew) {
    return StepAccess::accept(state, incoming, Rule::ProperInclusion);
  }
  return StepAccess::reject(state, incoming);
}

Decision revoke_unit_step(PolicyState& state, const Interval& incoming, bool prd,
                          bool inherit_marks) {
  const auto& hits = StepAccess::conflicts(state, incoming);
  if (hits.empty()) return StepAccess::accept(state, incoming, Rule::NoConflict);

  if (hits.size() == 1 &&
      classify_conflict(hits.front(), incoming) == ConflictKind::OldSubsumesNew) {
    const bool inherits = inherit_marks && StepAccess::marked(state, hits.front().id);
    Decision d = StepAccess::accept(state, incoming, Rule::ProperInclusion);
    if (inherits) StepAccess::mark(state, d);
    return d;
  }

  const bool all_partial = std::all_of(hits.begin(), hits.end(), [&](const Interval& j) {
    return classify_conflict(j, incoming) == ConflictKind::Partial;
  });
  const bool none_marked = std::none_of(hits.begin(), hits.end(), [&](const Interval& j) {
    return StepAccess::marked(state, j.id);
  });
  if (all_partial && prd && none_marked) {
    Decision d = StepAccess::accept(state, incoming, Rule::Predictions);
    StepAccess::mark(state, d);
    return d;
  }
  return StepAccess::reject(state, incoming);
}

Decision lr_step(PolicyState& state, const Interval& incoming, Aggregate aggregate,
                 double beta) {
  const WeightModel model = state.solution().weight_model();
  const auto& hits = StepAccess::conflicts(state, incoming);
  double reference = 0.0;
  if (aggregate == Aggregate::Sum) {
    reference = sum_weights(hits, model);
  } else {
    for (const Interval& j : hits) reference = std::max(reference, weight(j, model));
  }
  if (weight(incoming, model) > beta * reference) {
    // An empty conflict set is the w_c = 0 case of the threshold rule.
    return StepAccess::accept(state, incoming, Rule::MainThreshold);
  }
  return StepAccess::reject(state, incoming);
}

Decision revoke_prop_step(PolicyState& state, const Interval& incoming, bool prd, double lambda,
                          double threshold) {
  const WeightModel model = state.solution().weight_model();
  const auto& hits = StepAccess::conflicts(state, incoming);
  const double w = weight(incoming, model);
  const double conflicting = sum_weights(hits, model);

  if (w >= lambda * conflicting) {
    Decision d = StepAccess::accept(state, incoming, Rule::MainThreshold);
    StepAccess::record_prediction(state, incoming.id, prd);
    return d;
  }
  if (prd && w >= threshold * conflicting &&
      std::none_of(hits.begin(), hits.end(), [&](const Interval& j) {
        return StepAccess::predicted_optimal(state, j.id);
      })) {
    Decision d = StepAccess::accept(state, incoming, Rule::Predictions);
    StepAccess::record_prediction(state, incoming.id, prd);
    return d;
  }
  return StepAccess::reject(state, incoming);
}

Decision policy_step(PolicyState& state, const PolicyConfig& config, const Interval& incoming,
                     bool prd) {
  switch (config.algorithm) {
    case Algorithm::Naive: return naive_step(state, incoming, prd);
    case Algorithm::GrNR: return greedy_nr_step(state, incoming);
    case Algorithm::BK2K: return bk2k_step(state, incoming);
    case Algorithm::RevokeUnit:
      return revoke_unit_step(state, incoming, prd, config.inherit_marks);
    case Algorithm::LR: return lr_step(state, incoming, Aggregate::Max, config.beta);
    case Algorithm::LRPrime: return lr_step(state, incoming, Aggregate::Sum, config.beta);
    case Algorithm::RevokeProportional:
    case Algorithm::RevokePropHalf:
      return revoke_prop_step(state, incoming, prd, config.lambda, config.prediction_threshold);
  }
  throw std::logic_error("unhandled algorithm");
}

RunResult run_policy(const Instance& instance, std::span<const std::uint32_t> arrival_order,
                     const PredictionVector& preds, const PolicyConfig& config,
                     RunOptions options) {
  config.validate();
  const std::size_t n = instance.size();
  if (requires_proportional(config.algorithm) &&
      instance.weight_model() != WeightModel::Proportional) {
    throw std::invalid_argument(std::string(to_string(config.algorithm)) +
                                " requires proportional weights");
  }
  if (preds.size() != n) {
    throw std::invalid_argument("prediction vector length does not match the instance");
  }
  if (arrival_order.size() != n) {
    throw std::invalid_argument("arrival order is not a permutation of the instance");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (std::uint32_t id : arrival_order) {
    if (id >= n || seen[id] != 0) {
      throw std::invalid_argument("arrival order is not a permutation of the instance");
    }
    seen[id] = 1;
  }

  PolicyState state(instance.weight_model(), n);
  RunResult result;
  if (options.record_trace) result.trace.reserve(n);
  for (std::uint32_t id : arrival_order) {
    Decision d = policy_step(state, config, instance[id], preds[id]);
    if (options.record_trace) result.trace.push_back(std::move(d));
  }
  result.final_members = state.solution().member_ids();
  std::sort(result.final_members.begin(), result.final_members.end());
  for (IntervalId id : result.final_members) result.final_value += instance.weight_of(id);
  return result;
}

}  // namespace intsel
