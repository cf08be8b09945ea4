#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "intsel/interval.hpp"
#include "intsel/offline.hpp"
#include "intsel/solution_state.hpp"

namespace intsel {

// One binary prediction per interval id: 1 means "predicted to be in OPT".
class PredictionVector {
 public:
  PredictionVector() = default;
  explicit PredictionVector(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}
  explicit PredictionVector(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](IntervalId id) const { return bits_[id] != 0; }
  void set(IntervalId id, bool value) { bits_[id] = value ? 1 : 0; }
  void flip(IntervalId id) { bits_[id] ^= 1; }
  PredictionVector complement() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const PredictionVector&, const PredictionVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct ErrorReport {
  std::vector<double> per_interval;  // eta(I), indexed by id
  double total = 0.0;                // sum of per_interval, in id order
  double max_possible = 0.0;         // error of the complemented perfect vector
};

// Precomputed error costs for one instance and its canonical OPT. For every
// interval the cost of a wrong prediction is fixed: w(I) when an optimal
// interval is predicted 0, and (sum of conflicting optimal weight) - w(I) when
// a non-optimal interval is predicted 1.
class ErrorModel {
 public:
  ErrorModel(const Instance& instance, const CanonicalSolution& opt);

  const PredictionVector& perfect() const { return perfect_; }
  double flip_cost(IntervalId id) const { return flip_cost_[id]; }
  double max_error() const { return max_error_; }

  // Throws std::invalid_argument on a length mismatch.
  ErrorReport evaluate(const PredictionVector& preds) const;

  // Flips bits of the perfect vector in a seeded random order until the
  // running error first reaches target_fraction * max_error(). Fraction 1
  // flips every bit.
  std::pair<PredictionVector, ErrorReport> corrupt(double target_fraction,
                                                   std::uint64_t seed) const;

 private:
  PredictionVector perfect_;
  std::vector<double> flip_cost_;
  double max_error_ = 0.0;
};

// Bit i is 1 iff interval i belongs to `opt`. Throws std::invalid_argument if
// `opt` references ids outside the instance.
PredictionVector perfect_predictions(const Instance& instance, const CanonicalSolution& opt);

double interval_error(const Instance& instance, IntervalId id, const PredictionVector& preds,
                      const CanonicalSolution& opt);

ErrorReport total_error(const Instance& instance, const PredictionVector& preds,
                        const CanonicalSolution& opt);

// Precondition: `preds` is the perfect vector for `opt`. Throws
// std::invalid_argument if it is not, or if target_fraction is outside [0, 1].
std::pair<PredictionVector, ErrorReport> corrupt(const PredictionVector& preds,
                                                 const Instance& instance,
                                                 const CanonicalSolution& opt,
                                                 double target_fraction, std::uint64_t seed);

}  // namespace intsel
