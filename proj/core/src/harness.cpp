#include "intsel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>

#include "intsel/bounds.hpp"
#include "intsel/format.hpp"
#include "intsel/offline.hpp"
#include "intsel/predictions.hpp"
#include "intsel/random.hpp"

namespace intsel {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false, got '" + std::string(v) +
                    "'");
}

std::string csv_field(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), ',', '_');
  return out;
}

template <class T, class Fn>
T convert(std::string_view key, std::string_view v, Fn&& fn) {
  try {
    return fn(v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("bad value for '" + std::string(key) + "': " + e.what());
  }
}

std::vector<PolicyConfig> default_algorithms(DecisionModel model, WeightModel weights) {
  std::vector<PolicyConfig> out;
  if (model == DecisionModel::Irrevocable) {
    out.push_back(PolicyConfig::for_algorithm(Algorithm::Naive));
    out.push_back(PolicyConfig::for_algorithm(Algorithm::GrNR));
  } else if (weights == WeightModel::Unit) {
    out.push_back(PolicyConfig::for_algorithm(Algorithm::BK2K));
    out.push_back(PolicyConfig::for_algorithm(Algorithm::RevokeUnit));
  } else {
    out.push_back(PolicyConfig::for_algorithm(Algorithm::LR));
    PolicyConfig lr1 = PolicyConfig::for_algorithm(Algorithm::LRPrime);
    lr1.beta = 1.0;
    out.push_back(lr1);
    out.push_back(PolicyConfig::for_algorithm(Algorithm::RevokeProportional));
    PolicyConfig rp4 = PolicyConfig::for_algorithm(Algorithm::RevokeProportional);
    rp4.lambda = 4.0;
    out.push_back(rp4);
    out.push_back(PolicyConfig::for_algorithm(Algorithm::RevokePropHalf));
  }
  return out;
}

std::string join_fractions(const std::vector<double>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(fs[i]);
  }
  return out;
}

}  // namespace

std::vector<double> default_error_fractions() {
  std::vector<double> out;
  for (int i = 0; i <= 8; ++i) out.push_back(i / 8.0);
  return out;
}

void SweepConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  for (double f : error_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("error fractions must lie in [0, 1]");
  }
  for (const PolicyConfig& a : algorithms) {
    if (decision_model_of(a.algorithm) != decision_model) {
      throw ConfigError(std::string(to_string(a.algorithm)) + " does not run in the " +
                        std::string(to_string(decision_model)) + " model");
    }
    try {
      a.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string(to_string(a.algorithm)) + ": " + e.what());
    }
  }
}

PolicyConfig parse_algorithm_spec(std::string_view text) {
  const auto colon = text.find(':');
  PolicyConfig config;
  try {
    config = PolicyConfig::for_algorithm(parse_algorithm(trim(text.substr(0, colon))));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (colon == std::string_view::npos) return config;
  for (std::string_view kv : split(text.substr(colon + 1), ';')) {
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("algorithm parameter '" + std::string(kv) + "' must be key=value");
    }
    const std::string_view key = trim(kv.substr(0, eq));
    const std::string_view value = trim(kv.substr(eq + 1));
    const auto num = [&] { return convert<double>(key, value, parse_double); };
    if (key == "beta") {
      config.beta = num();
    } else if (key == "lambda") {
      config.lambda = num();
    } else if (key == "theta") {
      config.prediction_threshold = num();
    } else if (key == "inherit") {
      config.inherit_marks = parse_bool(key, value);
    } else {
      throw ConfigError("unknown algorithm parameter '" + std::string(key) + "'");
    }
  }
  return config;
}

std::string format_algorithm_spec(const PolicyConfig& config) {
  std::string out(to_string(config.algorithm));
  const std::string params = config.parameter_string();
  if (!params.empty()) out += ":" + params;
  return out;
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + " is not key=value");
    }
    out[std::string(trim(t.substr(0, eq)))] = std::string(trim(t.substr(eq + 1)));
  }
  return out;
}

SweepConfig sweep_config_from(const std::map<std::string, std::string>& values) {
  SweepConfig c;
  std::optional<DecisionModel> model;
  std::optional<std::vector<PolicyConfig>> algorithms;
  int sources = 0;
  for (const auto& [key, v] : values) {
    if (key == "dataset") {
      c.dataset = v;
    } else if (key == "instance") {
      c.source.kind = InstanceSource::Kind::File;
      c.source.path = v;
      ++sources;
    } else if (key == "swf") {
      c.source.kind = InstanceSource::Kind::Swf;
      c.source.path = v;
      ++sources;
    } else if (key == "swf-mapping") {
      c.source.swf_mapping = convert<SwfMapping>(key, v, parse_swf_mapping);
    } else if (key == "random-n") {
      c.source.random.n = static_cast<std::size_t>(convert<long long>(key, v, parse_integer));
    } else if (key == "random-lengths") {
      c.source.random.lengths = convert<LengthDistribution>(key, v, parse_length_distribution);
    } else if (key == "random-span") {
      c.source.random.span = convert<double>(key, v, parse_double);
    } else if (key == "random-seed") {
      c.source.random.seed = static_cast<std::uint64_t>(convert<long long>(key, v, parse_integer));
    } else if (key == "random-resolution") {
      c.source.random.resolution = convert<double>(key, v, parse_double);
    } else if (key == "weight") {
      c.weight_model = convert<WeightModel>(key, v, parse_weight_model);
    } else if (key == "model") {
      model = convert<DecisionModel>(key, v, parse_decision_model);
    } else if (key == "algos") {
      algorithms.emplace();
      for (std::string_view spec : split(v, ',')) {
        if (!spec.empty()) algorithms->push_back(parse_algorithm_spec(spec));
      }
    } else if (key == "fractions") {
      c.error_fractions.clear();
      for (std::string_view f : split(v, ',')) {
        if (!f.empty()) c.error_fractions.push_back(convert<double>(key, f, parse_double));
      }
    } else if (key == "trials") {
      c.trials = static_cast<int>(convert<long long>(key, v, parse_integer));
    } else if (key == "seed") {
      c.base_seed = static_cast<std::uint64_t>(convert<long long>(key, v, parse_integer));
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(convert<long long>(key, v, parse_integer));
    } else if (key == "fixed-corruption") {
      c.fixed_corruption = parse_bool(key, v);
    } else if (key == "check-bounds") {
      c.check_bounds = parse_bool(key, v);
    } else if (key == "out") {
      c.output_path = v;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (sources > 1) throw ConfigError("give at most one of 'instance' and 'swf'");
  if (!values.contains("fractions")) c.error_fractions = default_error_fractions();

  if (algorithms) {
    c.algorithms = *algorithms;
    if (!model) {
      if (c.algorithms.empty()) throw ConfigError("'algos' is empty and no 'model' given");
      model = decision_model_of(c.algorithms.front().algorithm);
    }
  }
  c.decision_model = model.value_or(DecisionModel::Irrevocable);
  if (!algorithms) {
    c.algorithms = default_algorithms(c.decision_model, c.weight_model.value_or(WeightModel::Unit));
  }
  if (c.dataset.empty()) {
    c.dataset = c.source.kind == InstanceSource::Kind::Random
                    ? "random"
                    : std::filesystem::path(c.source.path).stem().string();
  }
  c.validate();
  return c;
}

std::map<std::string, std::string> to_key_values(const SweepConfig& c) {
  std::map<std::string, std::string> out;
  out["dataset"] = c.dataset;
  switch (c.source.kind) {
    case InstanceSource::Kind::File:
      out["instance"] = c.source.path;
      break;
    case InstanceSource::Kind::Swf:
      out["swf"] = c.source.path;
      out["swf-mapping"] = std::string(to_string(c.source.swf_mapping));
      break;
    case InstanceSource::Kind::Random:
      out["random-n"] = std::to_string(c.source.random.n);
      out["random-lengths"] = to_string(c.source.random.lengths);
      out["random-span"] = format_double(c.source.random.span);
      out["random-seed"] = std::to_string(c.source.random.seed);
      out["random-resolution"] = format_double(c.source.random.resolution);
      break;
  }
  if (c.weight_model) out["weight"] = std::string(to_string(*c.weight_model));
  out["model"] = std::string(to_string(c.decision_model));
  std::string algos;
  for (std::size_t i = 0; i < c.algorithms.size(); ++i) {
    if (i > 0) algos += ',';
    algos += format_algorithm_spec(c.algorithms[i]);
  }
  out["algos"] = algos;
  out["fractions"] = join_fractions(c.error_fractions);
  out["trials"] = std::to_string(c.trials);
  out["seed"] = std::to_string(c.base_seed);
  out["fixed-corruption"] = c.fixed_corruption ? "true" : "false";
  out["check-bounds"] = c.check_bounds ? "true" : "false";
  if (!c.output_path.empty()) out["out"] = c.output_path;
  return out;
}

Instance load_instance(const SweepConfig& config) {
  const WeightModel fallback = config.weight_model.value_or(WeightModel::Unit);
  switch (config.source.kind) {
    case InstanceSource::Kind::File: {
      Instance inst = read_instance_file(config.source.path);
      return config.weight_model ? inst.with_weight_model(*config.weight_model) : inst;
    }
    case InstanceSource::Kind::Swf:
      return parse_swf_file(config.source.path, fallback, config.source.swf_mapping).instance;
    case InstanceSource::Kind::Random:
      return gen_random(config.source.random, fallback);
  }
  throw std::logic_error("unhandled instance source");
}

bool SweepResult::bounds_hold() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const BoundViolation& v) { return !v.conjecture; });
}

std::uint64_t trial_seed(std::uint64_t base_seed, const PolicyConfig& algorithm, double fraction,
                         int trial) {
  std::uint64_t s = mix_seed(base_seed, std::string_view(format_algorithm_spec(algorithm)));
  s = mix_seed(s, fraction);
  return mix_seed(s, static_cast<std::uint64_t>(trial));
}

SweepResult sweep(const SweepConfig& config, const Instance& instance) {
  config.validate();
  for (const PolicyConfig& a : config.algorithms) {
    if (requires_proportional(a.algorithm) &&
        instance.weight_model() != WeightModel::Proportional) {
      throw ConfigError(std::string(to_string(a.algorithm)) + " requires proportional weights");
    }
  }

  const CanonicalSolution opt = canonical_opt(instance);
  const ErrorModel errors(instance, opt);
  const std::size_t k = distinct_lengths(instance);

  const std::size_t n_alg = config.algorithms.size();
  const std::size_t n_frac = config.error_fractions.size();
  const std::size_t n_trial = static_cast<std::size_t>(config.trials);
  const std::size_t cells = n_alg * n_frac * n_trial;

  SweepResult result;
  result.rows.resize(cells);
  std::vector<std::vector<BoundViolation>> violations(cells);

  auto run_cell = [&](std::size_t cell) {
    const std::size_t a = cell / (n_frac * n_trial);
    const std::size_t f = (cell / n_trial) % n_frac;
    const int t = static_cast<int>(cell % n_trial);
    const PolicyConfig& algo = config.algorithms[a];
    const double fraction = config.error_fractions[f];

    const std::uint64_t seed = trial_seed(config.base_seed, algo, fraction, t);
    const std::uint64_t corruption_seed =
        config.fixed_corruption ? mix_seed(mix_seed(config.base_seed, "corruption"), fraction)
                                : mix_seed(seed, "corruption");
    const auto [preds, report] = errors.corrupt(fraction, corruption_seed);
    const std::vector<std::uint32_t> order =
        random_permutation(instance.size(), mix_seed(seed, "permutation"));
    const RunResult run = run_policy(instance, order, preds, algo, RunOptions{false});

    SweepRow& row = result.rows[cell];
    row.dataset = config.dataset;
    row.weight_model = std::string(to_string(instance.weight_model()));
    row.decision_model = std::string(to_string(config.decision_model));
    row.algorithm = std::string(to_string(algo.algorithm));
    row.parameters = algo.parameter_string();
    row.target_error_fraction = fraction;
    row.achieved_eta = report.total;
    row.eta_max = report.max_possible;
    row.trial = t;
    row.seed = seed;
    row.alg_value = run.final_value;
    row.opt_value = opt.value;
    row.ratio = competitive_ratio(opt.value, run.final_value);

    if (config.check_bounds) {
      const RunOutcome outcome{run.final_value, opt.value, report.total, k};
      for (const BoundCheck& b : check_bounds(algo, instance.weight_model(), outcome)) {
        if (!b.holds) violations[cell].push_back({cell, b.name, b.conjecture});
      }
    }
  };

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells, 1))));
  if (threads == 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t cell = next++; cell < cells; cell = next++) run_cell(cell);
        } catch (...) {
          failures[w] = std::current_exception();
          next = cells;
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  for (auto& v : violations) {
    result.violations.insert(result.violations.end(), v.begin(), v.end());
  }
  return result;
}

SweepResult sweep(const SweepConfig& config) {
  config.validate();
  const Instance instance = load_instance(config);
  SweepResult result = sweep(config, instance);
  if (!config.output_path.empty()) {
    write_csv_file(config.output_path, result.rows);
    std::ofstream meta(config.output_path + ".meta");
    if (!meta) throw std::runtime_error("cannot write '" + config.output_path + ".meta'");
    for (const auto& [key, value] : to_key_values(config)) meta << key << '=' << value << '\n';
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << csv_field(r.dataset) << ',' << r.weight_model << ',' << r.decision_model << ','
        << r.algorithm << ',' << csv_field(r.parameters) << ','
        << format_double(r.target_error_fraction) << ',' << format_double(r.achieved_eta) << ','
        << format_double(r.eta_max) << ',' << r.trial << ',' << r.seed << ','
        << format_double(r.alg_value) << ',' << format_double(r.opt_value) << ','
        << format_double(r.ratio) << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(out, rows);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace intsel
