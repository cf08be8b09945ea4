#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "intsel/interval.hpp"
#include "intsel/predictions.hpp"

namespace intsel {

// Malformed input text; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---- SWF traces -----------------------------------------------------------

// How a job becomes an interval: Start uses [submit + wait, submit + wait +
// runtime), Submit uses [submit, submit + runtime).
enum class SwfMapping { Start, Submit };

std::string_view to_string(SwfMapping mapping);
SwfMapping parse_swf_mapping(std::string_view text);

struct SwfJob {
  std::int64_t job_id = 0;
  double submit = 0.0;
  double wait = 0.0;
  double runtime = 0.0;
};

struct SwfParseResult {
  Instance instance;
  std::vector<SwfJob> jobs;  // jobs[i] produced interval i
  std::size_t raw_jobs = 0;
  std::size_t dropped = 0;
};

// Reads Standard Workload Format text. ';' lines are header comments; blank
// lines are skipped. Only fields 1-4 (job id, submit, wait, runtime) are
// interpreted, but every field must be numeric. Jobs with a non-positive
// runtime or a negative time field used by the mapping are dropped and
// counted. Throws ParseError naming the line on malformed input.
SwfParseResult parse_swf(std::istream& in, WeightModel model,
                         SwfMapping mapping = SwfMapping::Start);
SwfParseResult parse_swf_file(const std::string& path, WeightModel model,
                              SwfMapping mapping = SwfMapping::Start);

// ---- native files ---------------------------------------------------------

// Header "#interval-instance v1 <weight_model>", then one "id start finish"
// line per interval with ids 0..n-1 in order. Further '#' lines are comments.
void write_instance(std::ostream& out, const Instance& instance,
                    const std::vector<std::string>& comments = {});
Instance read_instance(std::istream& in);
void write_instance_file(const std::string& path, const Instance& instance,
                         const std::vector<std::string>& comments = {});
Instance read_instance_file(const std::string& path);

// Whitespace-separated 0/1 tokens indexed by id; '#' lines are comments.
void write_predictions(std::ostream& out, const PredictionVector& preds);
PredictionVector read_predictions(std::istream& in);
PredictionVector read_predictions_file(const std::string& path);

// Whitespace-separated interval ids in arrival order; '#' lines are comments.
void write_order(std::ostream& out, const std::vector<std::uint32_t>& order);
std::vector<std::uint32_t> read_order(std::istream& in);
std::vector<std::uint32_t> read_order_file(const std::string& path);

// ---- synthetic instances --------------------------------------------------

struct UniformLengths {
  double lo = 1.0;
  double hi = 2.0;
};

struct DistinctLengths {
  std::vector<double> lengths;
};

using LengthDistribution = std::variant<UniformLengths, DistinctLengths>;

// "uniform:a:b" or "k:l1,l2,...".
LengthDistribution parse_length_distribution(std::string_view text);
std::string to_string(const LengthDistribution& dist);

struct RandomSpec {
  std::size_t n = 0;
  LengthDistribution lengths = UniformLengths{};
  double span = 100.0;
  std::uint64_t seed = 0;
  // When positive, starts and uniform lengths are rounded to multiples of this
  // step. With a power-of-two step all weight sums are exact in double.
  double resolution = 0.0;
};

// Starts of DistinctLengths instances snap to this grid when no resolution is
// set, so that finish - start equals the drawn length for any length that is
// a multiple of it (all dyadic lengths of practical size).
inline constexpr double kDistinctStartStep = 1.0 / (1 << 20);

// n intervals with starts uniform in [0, span] and lengths from the
// distribution. Deterministic given the spec. Throws std::invalid_argument for
// an empty or non-positive length list.
Instance gen_random(const RandomSpec& spec, WeightModel model);

}  // namespace intsel
