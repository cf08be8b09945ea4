#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsel/interval.hpp"
#include "intsel/policies.hpp"
#include "intsel/workloads.hpp"

namespace intsel {

// Invalid or inconsistent sweep configuration (CLI exit status 1).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct InstanceSource {
  enum class Kind { File, Swf, Random };
  Kind kind = Kind::Random;
  std::string path;
  SwfMapping swf_mapping = SwfMapping::Start;
  RandomSpec random{.n = 100};  // used when no file is given
};

struct SweepConfig {
  std::string dataset;
  InstanceSource source;
  // Unset keeps the weight model of a native instance file; the other sources
  // default to unit weights.
  std::optional<WeightModel> weight_model;
  DecisionModel decision_model = DecisionModel::Irrevocable;
  std::vector<PolicyConfig> algorithms;
  std::vector<double> error_fractions;
  int trials = 50;
  std::uint64_t base_seed = 1;
  std::string output_path;
  unsigned threads = 1;  // 0 = hardware concurrency; never affects output
  bool fixed_corruption = false;
  bool check_bounds = false;

  // Throws ConfigError if fractions leave [0, 1], trials < 1, an algorithm
  // does not belong to the decision model, or a parameter is out of range.
  void validate() const;
};

// 0, 1/8, ..., 1.
std::vector<double> default_error_fractions();

// "name[:key=value[;key=value]]" with keys beta, lambda, theta, inherit.
PolicyConfig parse_algorithm_spec(std::string_view text);
std::string format_algorithm_spec(const PolicyConfig& config);

// Flat key=value text; '#' starts a comment line.
std::map<std::string, std::string> parse_key_values(std::istream& in);
// Recognised keys: dataset, instance, swf, swf-mapping, random-n,
// random-lengths, random-span, random-seed, random-resolution, weight, model,
// algos, fractions, trials, seed, threads, fixed-corruption, check-bounds, out.
SweepConfig sweep_config_from(const std::map<std::string, std::string>& values);
std::map<std::string, std::string> to_key_values(const SweepConfig& config);

Instance load_instance(const SweepConfig& config);

struct SweepRow {
  std::string dataset;
  std::string weight_model;
  std::string decision_model;
  std::string algorithm;
  std::string parameters;
  double target_error_fraction = 0.0;
  double achieved_eta = 0.0;
  double eta_max = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double alg_value = 0.0;
  double opt_value = 0.0;
  double ratio = 1.0;  // opt / alg
};

inline constexpr const char* kSweepCsvHeader =
    "dataset,weight_model,decision_model,algorithm,parameters,target_error_fraction,"
    "achieved_eta,eta_max,trial,seed,alg_value,opt_value,ratio";

struct BoundViolation {
  std::size_t row = 0;
  std::string bound;
  bool conjecture = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (algorithm, fraction, trial)
  std::vector<BoundViolation> violations;

  bool bounds_hold() const;  // ignores conjecture violations
};

// Seed of one (algorithm, fraction, trial) cell.
std::uint64_t trial_seed(std::uint64_t base_seed, const PolicyConfig& algorithm,
                         double fraction, int trial);

// Runs every (algorithm, fraction, trial) cell on `instance`. OPT and error
// costs are computed once.
SweepResult sweep(const SweepConfig& config, const Instance& instance);
// Loads the configured instance, runs the sweep, and writes the CSV (plus a
// "<out>.meta" key=value sidecar) when output_path is set.
SweepResult sweep(const SweepConfig& config);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace intsel
