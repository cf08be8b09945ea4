#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intsel/adversarial.hpp"
#include "intsel/bounds.hpp"
#include "intsel/format.hpp"
#include "intsel/harness.hpp"
#include "intsel/offline.hpp"
#include "intsel/policies.hpp"
#include "intsel/predictions.hpp"
#include "intsel/random.hpp"
#include "intsel/workloads.hpp"

namespace intsel::cli {

namespace {

// Thrown for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string join_ids(const std::vector<IntervalId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

void write_file(const std::string& path, const auto& writer) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  writer(f);
}

struct RunOptionsCli {
  std::string instance;
  std::string algo = "naive";
  std::optional<double> lambda;
  std::optional<double> beta;
  std::optional<double> theta;
  bool no_inherit = false;
  std::uint64_t seed = 1;
  std::optional<double> error;
  std::string predictions;
  std::string order;
  bool trace = false;
};

int cmd_opt(const std::string& path, std::ostream& out) {
  const Instance inst = read_instance_file(path);
  const CanonicalSolution opt = canonical_opt(inst);
  out << "opt_value=" << format_double(opt.value) << '\n';
  out << "members=" << join_ids(opt.member_ids) << '\n';
  return kExitOk;
}

int cmd_eta(const std::string& inst_path, const std::string& pred_path, bool per_interval,
            std::ostream& out) {
  const Instance inst = read_instance_file(inst_path);
  const PredictionVector preds = read_predictions_file(pred_path);
  if (preds.size() != inst.size()) {
    throw std::runtime_error("prediction file has " + std::to_string(preds.size()) +
                             " entries for " + std::to_string(inst.size()) + " intervals");
  }
  const ErrorReport report = total_error(inst, preds, canonical_opt(inst));
  out << "total=" << format_double(report.total) << '\n';
  out << "max_possible=" << format_double(report.max_possible) << '\n';
  if (per_interval) {
    for (std::size_t i = 0; i < report.per_interval.size(); ++i) {
      out << "eta[" << i << "]=" << format_double(report.per_interval[i]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_run(const RunOptionsCli& o, std::ostream& out) {
  PolicyConfig config = parse_algorithm_spec(o.algo);
  if (o.lambda) config.lambda = *o.lambda;
  if (o.beta) config.beta = *o.beta;
  if (o.theta) config.prediction_threshold = *o.theta;
  if (o.no_inherit) config.inherit_marks = false;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.error && !o.predictions.empty()) {
    throw UsageError("--error and --predictions are mutually exclusive");
  }
  if (o.error && !(*o.error >= 0.0 && *o.error <= 1.0)) {
    throw UsageError("--error must lie in [0, 1]");
  }

  const Instance inst = read_instance_file(o.instance);
  if (requires_proportional(config.algorithm) &&
      inst.weight_model() != WeightModel::Proportional) {
    throw UsageError(std::string(to_string(config.algorithm)) + " requires proportional weights");
  }
  const CanonicalSolution opt = canonical_opt(inst);
  const ErrorModel errors(inst, opt);

  PredictionVector preds;
  if (!o.predictions.empty()) {
    preds = read_predictions_file(o.predictions);
  } else {
    preds = errors.corrupt(o.error.value_or(0.0), mix_seed(o.seed, "corruption")).first;
  }
  const std::vector<std::uint32_t> order =
      o.order.empty() ? random_permutation(inst.size(), mix_seed(o.seed, "permutation"))
                      : read_order_file(o.order);
  const ErrorReport report = errors.evaluate(preds);
  const RunResult run = run_policy(inst, order, preds, config, RunOptions{o.trace});

  out << "algorithm=" << to_string(config.algorithm) << '\n';
  out << "parameters=" << config.parameter_string() << '\n';
  out << "alg_value=" << format_double(run.final_value) << '\n';
  out << "opt_value=" << format_double(opt.value) << '\n';
  out << "eta=" << format_double(report.total) << '\n';
  out << "eta_max=" << format_double(report.max_possible) << '\n';
  out << "ratio=" << format_double(competitive_ratio(opt.value, run.final_value)) << '\n';
  out << "members=" << join_ids(run.final_members) << '\n';
  if (o.trace) {
    for (const Decision& d : run.trace) {
      out << "step id=" << d.id << ' '
          << (d.kind == DecisionKind::Accept ? "accept" : "reject") << " rule=" << to_string(d.rule)
          << " displaced=[" << join_ids(d.displaced) << ']' << (d.marked ? " marked" : "") << '\n';
    }
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::map<std::string, std::string>& flags,
              std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> values;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
    values = parse_key_values(in);
  }
  for (const auto& [k, v] : flags) {
    // A later source replaces an earlier one.
    if (k == "instance" || k == "swf") {
      values.erase("instance");
      values.erase("swf");
    }
    values[k] = v;
  }
  const SweepConfig config = sweep_config_from(values);
  const SweepResult result = sweep(config);
  if (config.output_path.empty()) write_csv(out, result.rows);

  int status = kExitOk;
  for (const BoundViolation& v : result.violations) {
    const SweepRow& row = result.rows[v.row];
    err << (v.conjecture ? "conjecture not met: " : "bound violated: ") << v.bound
        << " algorithm=" << row.algorithm << " fraction=" << format_double(row.target_error_fraction)
        << " trial=" << row.trial << " alg=" << format_double(row.alg_value)
        << " opt=" << format_double(row.opt_value) << '\n';
    if (!v.conjecture) status = kExitBoundViolation;
  }
  if (!config.output_path.empty()) {
    err << "wrote " << result.rows.size() << " rows to " << config.output_path << '\n';
  }
  return status;
}

int cmd_gen_adversarial(const std::string& kind, int copies, std::optional<double> weight,
                        double alpha, double eps, const std::string& branch,
                        const std::string& prefix, std::ostream& out) {
  if (branch != "accept" && branch != "reject") {
    throw UsageError("--branch must be accept or reject");
  }
  const Branch b = branch == "accept" ? Branch::Accept : Branch::Reject;
  AdversarialFixture fx;
  try {
    if (kind == "thm2") {
      fx = gen_theorem2(copies, b);
    } else if (kind == "thm4") {
      fx = gen_theorem4(copies, weight.value_or(1.0), b);
    } else if (kind == "alpha") {
      fx = gen_alpha_lb(alpha, eps, weight.value_or(10.0));
    } else {
      throw UsageError("unknown fixture '" + kind + "' (thm2, thm4, alpha)");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_instance_file(prefix + ".inst", fx.instance, {"fixture=" + fx.name});
  write_file(prefix + ".pred", [&](std::ostream& f) { write_predictions(f, fx.preds); });
  write_file(prefix + ".order", [&](std::ostream& f) { write_order(f, fx.arrival_order); });
  write_file(prefix + ".expected", [&](std::ostream& f) {
    for (const auto& [key, value] : fx.expected) f << key << '=' << format_double(value) << '\n';
  });
  out << "fixture=" << fx.name << '\n';
  out << "intervals=" << fx.instance.size() << '\n';
  for (const auto& [key, value] : fx.expected) out << key << '=' << format_double(value) << '\n';
  return kExitOk;
}

int cmd_ingest_swf(const std::string& path, const std::string& mapping_text,
                   const std::string& weight_text, const std::string& out_path,
                   std::ostream& out) {
  SwfMapping mapping;
  WeightModel weights;
  try {
    mapping = parse_swf_mapping(mapping_text);
    weights = parse_weight_model(weight_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SwfParseResult parsed = parse_swf_file(path, weights, mapping);
  write_instance_file(out_path, parsed.instance,
                      {"source=" + path, "swf-mapping=" + std::string(to_string(mapping)),
                       "raw_jobs=" + std::to_string(parsed.raw_jobs),
                       "dropped=" + std::to_string(parsed.dropped)});
  out << "intervals=" << parsed.instance.size() << '\n';
  out << "raw_jobs=" << parsed.raw_jobs << '\n';
  out << "dropped=" << parsed.dropped << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online interval selection with binary predictions"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string predictions_path;
  bool per_interval = false;

  auto* opt_cmd = app.add_subcommand("opt", "Print the canonical optimal solution");
  opt_cmd->add_option("instance", instance_path, "Native instance file")->required();

  auto* eta_cmd = app.add_subcommand("eta", "Print the prediction error report");
  eta_cmd->add_option("instance", instance_path, "Native instance file")->required();
  eta_cmd->add_option("predictions", predictions_path, "Prediction file (0/1 per id)")->required();
  eta_cmd->add_flag("--per-interval", per_interval, "Also print eta(I) for every interval");

  RunOptionsCli run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run one policy over one arrival order");
  run_cmd->add_option("instance", run_opts.instance, "Native instance file")->required();
  run_cmd->add_option("--algo", run_opts.algo, "Algorithm, optionally name:key=value");
  run_cmd->add_option("--lambda", run_opts.lambda, "Revoke-Proportional trust parameter (> 1)");
  run_cmd->add_option("--beta", run_opts.beta, "LR / LR' threshold (>= 1)");
  run_cmd->add_option("--theta", run_opts.theta, "Prediction-rule weight threshold");
  run_cmd->add_flag("--no-inherit", run_opts.no_inherit, "Revoke-Unit without mark inheritance");
  run_cmd->add_option("--seed", run_opts.seed, "Seed for corruption and arrival order");
  run_cmd->add_option("--error", run_opts.error, "Target error fraction in [0, 1]");
  run_cmd->add_option("--predictions", run_opts.predictions, "Prediction file to replay");
  run_cmd->add_option("--order", run_opts.order, "Arrival order file to replay");
  run_cmd->add_flag("--trace", run_opts.trace, "Print every decision");

  std::string config_path;
  std::map<std::string, std::string> sweep_values;
  std::map<std::string, std::string> sweep_storage;
  bool fixed_corruption = false;
  bool check_bounds = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an error/permutation sweep and write CSV");
  sweep_cmd->add_option("--config", config_path, "key=value config file");
  const std::vector<std::pair<std::string, std::string>> sweep_keys = {
      {"dataset", "Dataset label for the CSV"},
      {"instance", "Native instance file"},
      {"swf", "SWF trace file"},
      {"swf-mapping", "start or submit"},
      {"random-n", "Random instance size"},
      {"random-lengths", "uniform:lo:hi or k:l1,l2,..."},
      {"random-span", "Random start range"},
      {"random-seed", "Random instance seed"},
      {"random-resolution", "Coordinate grid step (0 = continuous)"},
      {"weight", "unit or proportional"},
      {"model", "irrevocable or revocable"},
      {"algos", "Comma-separated algorithm specs"},
      {"fractions", "Comma-separated target error fractions"},
      {"trials", "Trials per (algorithm, fraction)"},
      {"seed", "Base seed"},
      {"threads", "Worker threads (0 = all cores)"},
      {"out", "Output CSV path (stdout when omitted)"},
  };
  std::vector<std::pair<std::string, CLI::Option*>> sweep_options;
  for (const auto& [key, help] : sweep_keys) {
    sweep_options.emplace_back(key, sweep_cmd->add_option("--" + key, sweep_storage[key], help));
  }
  sweep_cmd->add_flag("--fixed-corruption", fixed_corruption,
                      "Use one corruption draw per fraction for all trials");
  sweep_cmd->add_flag("--check-bounds", check_bounds,
                      "Check every row against its worst-case bound (exit 3 on violation)");

  std::string adv_kind;
  int copies = 1;
  std::optional<double> adv_weight;
  double adv_alpha = kGoldenRatio;
  double adv_eps = 0.1;
  std::string adv_branch = "accept";
  std::string adv_out = "fixture";
  auto* adv_cmd = app.add_subcommand("gen-adversarial", "Write a tight lower-bound fixture");
  adv_cmd->add_option("kind", adv_kind, "thm2, thm4 or alpha")->required();
  adv_cmd->add_option("--copies", copies, "Disjoint copies of the gadget");
  adv_cmd->add_option("--weight", adv_weight, "Base weight w (thm4 default 1, alpha default 10)");
  adv_cmd->add_option("--alpha", adv_alpha, "alpha (alpha fixture)");
  adv_cmd->add_option("--eps", adv_eps, "epsilon (alpha fixture)");
  adv_cmd->add_option("--branch", adv_branch, "accept or reject");
  adv_cmd->add_option("--out", adv_out, "Output prefix for .inst/.pred/.order/.expected");

  std::string swf_path;
  std::string swf_mapping = "start";
  std::string swf_weight = "unit";
  std::string swf_out;
  auto* swf_cmd = app.add_subcommand("ingest-swf", "Convert an SWF trace to a native instance");
  swf_cmd->add_option("path", swf_path, "SWF trace file")->required();
  swf_cmd->add_option("--swf-mapping", swf_mapping, "start or submit");
  swf_cmd->add_option("--weight", swf_weight, "unit or proportional");
  swf_cmd->add_option("--out", swf_out, "Output instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (opt_cmd->parsed()) return cmd_opt(instance_path, out);
    if (eta_cmd->parsed()) return cmd_eta(instance_path, predictions_path, per_interval, out);
    if (run_cmd->parsed()) return cmd_run(run_opts, out);
    if (sweep_cmd->parsed()) {
      for (const auto& [key, option] : sweep_options) {
        if (option->count() > 0) sweep_values[key] = sweep_storage[key];
      }
      if (fixed_corruption) sweep_values["fixed-corruption"] = "true";
      if (check_bounds) sweep_values["check-bounds"] = "true";
      return cmd_sweep(config_path, sweep_values, out, err);
    }
    if (adv_cmd->parsed()) {
      return cmd_gen_adversarial(adv_kind, copies, adv_weight, adv_alpha, adv_eps, adv_branch,
                                 adv_out, out);
    }
    if (swf_cmd->parsed()) return cmd_ingest_swf(swf_path, swf_mapping, swf_weight, swf_out, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace intsel::cli
