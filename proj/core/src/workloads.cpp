#include "intsel/workloads.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "intsel/format.hpp"
#include "intsel/random.hpp"

namespace intsel {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

double round_to(double value, double step) {
  return step > 0.0 ? std::round(value / step) * step : value;
}

// Reads whitespace-separated tokens, skipping '#' comment lines.
template <class Fn>
void for_each_token(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    for (std::string_view tok : split_ws(line)) fn(lineno, tok);
  }
}

}  // namespace

std::string_view to_string(SwfMapping mapping) {
  return mapping == SwfMapping::Start ? "start" : "submit";
}

SwfMapping parse_swf_mapping(std::string_view text) {
  if (text == "start") return SwfMapping::Start;
  if (text == "submit") return SwfMapping::Submit;
  throw std::invalid_argument("unknown SWF mapping '" + std::string(text) + "'");
}

SwfParseResult parse_swf(std::istream& in, WeightModel model, SwfMapping mapping) {
  SwfParseResult result;
  std::vector<Interval> intervals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const auto first = line.find_first_not_of(" \t\r");
    if (line[first] == ';') continue;

    const auto fields = split_ws(line);
    if (fields.size() < 4) {
      throw ParseError(lineno, "expected at least 4 fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> values;
    values.reserve(fields.size());
    for (std::size_t f = 0; f < fields.size(); ++f) {
      try {
        values.push_back(parse_double(fields[f]));
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, "field " + std::to_string(f + 1) + " is not numeric: '" +
                                     std::string(fields[f]) + "'");
      }
    }
    ++result.raw_jobs;

    SwfJob job{static_cast<std::int64_t>(values[0]), values[1], values[2], values[3]};
    const bool usable = job.submit >= 0.0 && job.runtime > 0.0 &&
                        (mapping == SwfMapping::Submit || job.wait >= 0.0);
    const double start = mapping == SwfMapping::Start ? job.submit + job.wait : job.submit;
    const double finish = start + job.runtime;
    if (!usable || !(start < finish)) {
      ++result.dropped;
      continue;
    }
    intervals.push_back(Interval{static_cast<IntervalId>(intervals.size()), start, finish});
    result.jobs.push_back(job);
  }
  result.instance = Instance(std::move(intervals), model);
  return result;
}

SwfParseResult parse_swf_file(const std::string& path, WeightModel model, SwfMapping mapping) {
  std::ifstream in = open_input(path);
  return parse_swf(in, model, mapping);
}

void write_instance(std::ostream& out, const Instance& instance,
                    const std::vector<std::string>& comments) {
  out << "#interval-instance v1 " << to_string(instance.weight_model()) << '\n';
  for (const std::string& c : comments) out << "# " << c << '\n';
  for (const Interval& iv : instance.intervals()) {
    out << iv.id << ' ' << format_double(iv.start) << ' ' << format_double(iv.finish) << '\n';
  }
}

Instance read_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing instance header");
  const auto header = split_ws(line);
  if (header.size() != 3 || header[0] != "#interval-instance" || header[1] != "v1") {
    throw ParseError(1, "expected '#interval-instance v1 <weight_model>'");
  }
  WeightModel model;
  try {
    model = parse_weight_model(header[2]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }

  std::vector<Interval> intervals;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || line[0] == '#') continue;
    const auto fields = split_ws(line);
    if (fields.size() != 3) throw ParseError(lineno, "expected 'id start finish'");
    try {
      const long long id = parse_integer(fields[0]);
      if (id != static_cast<long long>(intervals.size())) {
        throw ParseError(lineno, "expected id " + std::to_string(intervals.size()));
      }
      intervals.push_back(Interval::make(static_cast<IntervalId>(id), parse_double(fields[1]),
                                         parse_double(fields[2])));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return Instance(std::move(intervals), model);
}

void write_instance_file(const std::string& path, const Instance& instance,
                         const std::vector<std::string>& comments) {
  std::ofstream out = open_output(path);
  write_instance(out, instance, comments);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_instance(in);
}

void write_predictions(std::ostream& out, const PredictionVector& preds) {
  for (std::size_t i = 0; i < preds.size(); ++i) {
    out << (preds[static_cast<IntervalId>(i)] ? '1' : '0') << '\n';
  }
}

PredictionVector read_predictions(std::istream& in) {
  std::vector<std::uint8_t> bits;
  for_each_token(in, [&](std::size_t lineno, std::string_view tok) {
    if (tok != "0" && tok != "1") throw ParseError(lineno, "prediction must be 0 or 1");
    bits.push_back(tok == "1" ? 1 : 0);
  });
  return PredictionVector(std::move(bits));
}

PredictionVector read_predictions_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_predictions(in);
}

void write_order(std::ostream& out, const std::vector<std::uint32_t>& order) {
  for (std::uint32_t id : order) out << id << '\n';
}

std::vector<std::uint32_t> read_order(std::istream& in) {
  std::vector<std::uint32_t> order;
  for_each_token(in, [&](std::size_t lineno, std::string_view tok) {
    try {
      const long long id = parse_integer(tok);
      if (id < 0) throw std::invalid_argument("negative id");
      order.push_back(static_cast<std::uint32_t>(id));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  });
  return order;
}

std::vector<std::uint32_t> read_order_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_order(in);
}

LengthDistribution parse_length_distribution(std::string_view text) {
  if (text.starts_with("uniform:")) {
    const std::string_view rest = text.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected uniform:<lo>:<hi>");
    }
    UniformLengths u{parse_double(rest.substr(0, colon)), parse_double(rest.substr(colon + 1))};
    if (!(u.lo > 0.0 && u.lo <= u.hi)) {
      throw std::invalid_argument("uniform lengths need 0 < lo <= hi");
    }
    return u;
  }
  if (text.starts_with("k:")) {
    DistinctLengths d;
    std::string_view rest = text.substr(2);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      d.lengths.push_back(parse_double(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return d;
  }
  throw std::invalid_argument("unknown length distribution '" + std::string(text) + "'");
}

std::string to_string(const LengthDistribution& dist) {
  if (const auto* u = std::get_if<UniformLengths>(&dist)) {
    return "uniform:" + format_double(u->lo) + ":" + format_double(u->hi);
  }
  std::string out = "k:";
  const auto& lengths = std::get<DistinctLengths>(dist).lengths;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(lengths[i]);
  }
  return out;
}

Instance gen_random(const RandomSpec& spec, WeightModel model) {
  if (const auto* d = std::get_if<DistinctLengths>(&spec.lengths)) {
    if (d->lengths.empty()) throw std::invalid_argument("k_distinct needs at least one length");
    for (double l : d->lengths) {
      if (!(l > 0.0)) throw std::invalid_argument("lengths must be positive");
    }
  } else {
    const auto& u = std::get<UniformLengths>(spec.lengths);
    if (!(u.lo > 0.0 && u.lo <= u.hi)) {
      throw std::invalid_argument("uniform lengths need 0 < lo <= hi");
    }
  }
  if (!(spec.span >= 0.0)) throw std::invalid_argument("span must be >= 0");

  // finish - start must reproduce the drawn length exactly, otherwise one
  // nominal length splits into several after rounding.
  double start_step = spec.resolution;
  if (start_step <= 0.0 && std::holds_alternative<DistinctLengths>(spec.lengths)) {
    start_step = kDistinctStartStep;
  }

  Rng rng(spec.seed);
  std::vector<Interval> intervals;
  intervals.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double start = round_to(rng.uniform_real(0.0, spec.span), start_step);
    double length = 0.0;
    if (const auto* d = std::get_if<DistinctLengths>(&spec.lengths)) {
      length = d->lengths[rng.uniform_index(d->lengths.size())];
    } else {
      const auto& u = std::get<UniformLengths>(spec.lengths);
      length = round_to(rng.uniform_real(u.lo, u.hi), spec.resolution);
      if (spec.resolution > 0.0) length = std::max(length, spec.resolution);
    }
    intervals.push_back(Interval::make(static_cast<IntervalId>(i), start, start + length));
  }
  return Instance(std::move(intervals), model);
}

}  // namespace intsel
