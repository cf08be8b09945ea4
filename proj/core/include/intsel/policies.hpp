#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intsel/interval.hpp"
#include "intsel/predictions.hpp"
#include "intsel/solution_state.hpp"

namespace intsel {

inline constexpr double kGoldenRatio = std::numbers::phi;

enum class Algorithm {
  Naive,
  GrNR,
  BK2K,
  RevokeUnit,
  LR,
  LRPrime,
  RevokeProportional,
  RevokePropHalf,
};

enum class DecisionModel { Irrevocable, Revocable };

std::string_view to_string(Algorithm algorithm);
// CLI names: naive, grnr, bk2k, revoke-unit, lr, lr-prime, revoke-prop,
// revoke-prop-half.
Algorithm parse_algorithm(std::string_view text);
std::string_view to_string(DecisionModel model);
DecisionModel parse_decision_model(std::string_view text);

// Naive and GrNR never displace; everything else revokes.
DecisionModel decision_model_of(Algorithm algorithm);
bool uses_predictions(Algorithm algorithm);
// LR, LR' and the Revoke-Proportional family are defined for proportional
// weights only.
bool requires_proportional(Algorithm algorithm);

struct PolicyConfig {
  Algorithm algorithm = Algorithm::Naive;
  double beta = kGoldenRatio;        // LR / LR'
  double lambda = kGoldenRatio;      // Revoke-Proportional family, > 1
  double prediction_threshold = 1.0;  // 1 for RevokeProportional, 1/2 for RevokePropHalf
  bool inherit_marks = true;          // Revoke-Unit; false gives the 3k-robust variant

  // Defaults for `algorithm`, including its prediction threshold.
  static PolicyConfig for_algorithm(Algorithm algorithm);

  // Throws std::invalid_argument for out-of-range parameters.
  void validate() const;

  // "beta=1.618..." style, ';'-separated, empty when the algorithm has no
  // parameters. Numbers use shortest round-trip formatting.
  std::string parameter_string() const;
};

enum class DecisionKind { Accept, Reject };

enum class Rule {
  NoConflict,
  ProperInclusion,
  Predictions,
  MainThreshold,
  Rejected,
};

std::string_view to_string(Rule rule);

struct Decision {
  IntervalId id = 0;
  DecisionKind kind = DecisionKind::Reject;
  std::vector<IntervalId> displaced;
  Rule rule = Rule::Rejected;
  bool marked = false;  // Revoke-Unit: the accepted interval entered M
};

// Mutable state of one online run. Per-id tables are sized to the instance.
class PolicyState {
 public:
  PolicyState(WeightModel model, std::size_t n);

  const SolutionState& solution() const { return solution_; }
  bool is_marked(IntervalId id) const { return marked_[id] != 0; }
  // Prediction carried by `id` when it was accepted; nullopt if never accepted.
  std::optional<bool> accepted_prediction(IntervalId id) const;
  bool is_rejected(IntervalId id) const { return rejected_[id] != 0; }
  std::size_t capacity() const { return marked_.size(); }

  // Test hook: places an interval directly into the solution.
  void seed_member(const Interval& interval, bool marked = false,
                   std::optional<bool> prediction = std::nullopt);

 private:
  friend struct StepAccess;

  SolutionState solution_;
  std::vector<std::uint8_t> marked_;
  std::vector<std::int8_t> accepted_prediction_;  // -1 unknown
  std::vector<std::uint8_t> rejected_;
  std::vector<Interval> scratch_;
};

enum class Aggregate { Max, Sum };

Decision naive_step(PolicyState& state, const Interval& incoming, bool prd);
Decision greedy_nr_step(PolicyState& state, const Interval& incoming);
Decision bk2k_step(PolicyState& state, const Interval& incoming);
Decision revoke_unit_step(PolicyState& state, const Interval& incoming, bool prd,
                          bool inherit_marks = true);
Decision lr_step(PolicyState& state, const Interval& incoming, Aggregate aggregate,
                 double beta = kGoldenRatio);
Decision revoke_prop_step(PolicyState& state, const Interval& incoming, bool prd, double lambda,
                          double threshold);

// Dispatches one arrival to the step function selected by `config`.
Decision policy_step(PolicyState& state, const PolicyConfig& config, const Interval& incoming,
                     bool prd);

struct RunResult {
  double final_value = 0.0;
  std::vector<IntervalId> final_members;  // sorted ascending
  std::vector<Decision> trace;            // empty unless recorded
};

struct RunOptions {
  bool record_trace = true;
};

// Feeds the intervals in `arrival_order` to the configured policy. Throws
// std::invalid_argument when arrival_order is not a permutation of 0..n-1, the
// prediction vector has the wrong length, the configuration is invalid, or the
// algorithm is not defined for the instance's weight model.
RunResult run_policy(const Instance& instance, std::span<const std::uint32_t> arrival_order,
                     const PredictionVector& preds, const PolicyConfig& config,
                     RunOptions options = {});

}  // namespace intsel
