#include "intsel/adversarial.hpp"

#include <numeric>
#include <stdexcept>

namespace intsel {

namespace {

std::vector<std::uint32_t> identity_order(std::size_t n) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  return order;
}

}  // namespace

AdversarialFixture gen_theorem2(int copies, Branch branch) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  const double m = copies;
  std::vector<std::pair<double, double>> spans;
  std::vector<std::uint8_t> bits;
  for (int c = 0; c < copies; ++c) {
    const double t = 20.0 * c;
    spans.emplace_back(t, t + 16.0);
    bits.push_back(0);
    if (branch == Branch::Accept) {
      spans.emplace_back(t + 2.0, t + 7.0);
      bits.push_back(0);
      spans.emplace_back(t + 8.0, t + 13.0);
      bits.push_back(1);
    }
  }
  AdversarialFixture fx;
  fx.instance = Instance::from_spans(spans, WeightModel::Unit);
  fx.arrival_order = identity_order(spans.size());
  fx.preds = PredictionVector(std::move(bits));
  if (branch == Branch::Accept) {
    fx.name = "thm2-accept";
    fx.expected = {{"opt", 2 * m},       {"eta", m},
                   {"alg:grnr", m},      {"alg:naive", m},
                   {"alg:bk2k", 2 * m},  {"alg:revoke-unit", 2 * m}};
  } else {
    fx.name = "thm2-reject";
    fx.expected = {{"opt", m}, {"eta", m}, {"alg:naive", 0.0}};
  }
  return fx;
}

AdversarialFixture gen_theorem4(int copies, double base_weight, Branch branch) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  if (!(base_weight > 0.0)) throw std::invalid_argument("base weight must be > 0");
  const double w = base_weight;
  const double m = copies;
  std::vector<std::pair<double, double>> spans;
  std::vector<std::uint8_t> bits;
  for (int c = 0; c < copies; ++c) {
    const double t = c * (3.0 * w + 1.0);
    spans.emplace_back(t + w / 2.0, t + 1.5 * w);
    bits.push_back(0);
    if (branch == Branch::Accept) {
      spans.emplace_back(t, t + w);
      bits.push_back(1);
      spans.emplace_back(t + w, t + 3.0 * w);
      bits.push_back(0);
    }
  }
  AdversarialFixture fx;
  fx.instance = Instance::from_spans(spans, WeightModel::Proportional);
  fx.arrival_order = identity_order(spans.size());
  fx.preds = PredictionVector(std::move(bits));
  if (branch == Branch::Accept) {
    fx.name = "thm4-accept";
    fx.expected = {{"opt", 3 * m * w},          {"eta", 2 * m * w},
                   {"alg:grnr", m * w},         {"alg:naive", m * w},
                   {"alg:lr", 2 * m * w},       {"alg:lr-prime", 2 * m * w},
                   {"alg:revoke-prop", 3 * m * w}, {"alg:revoke-prop-half", 3 * m * w}};
  } else {
    fx.name = "thm4-reject";
    fx.expected = {{"opt", m * w}, {"eta", m * w}, {"alg:naive", 0.0}};
  }
  return fx;
}

AdversarialFixture gen_alpha_lb(double alpha, double eps, double base_weight) {
  const double w = base_weight;
  const double side = alpha * w - eps;
  if (!(alpha >= 1.0) || !(eps > 0.0) || !(w > 0.0) || !(side > 0.0) || !(w - 2.0 * eps > 0.0)) {
    throw std::invalid_argument("gen_alpha_lb needs alpha >= 1, eps > 0, alpha w - eps > 0 and "
                                "w - 2 eps > 0");
  }
  const std::vector<std::pair<double, double>> spans = {
      {0.0, w},
      {eps - side, eps},
      {w - eps, w - eps + side},
      {eps, w - eps},
  };
  AdversarialFixture fx;
  fx.name = "alpha-lb";
  fx.instance = Instance::from_spans(spans, WeightModel::Proportional);
  fx.arrival_order = identity_order(spans.size());
  fx.preds = PredictionVector(std::vector<std::uint8_t>{0, 1, 1, 1});

  // OPT from the realised weights so equality checks are exact.
  const Instance& inst = fx.instance;
  const double opt = inst.weight_of(1) + inst.weight_of(2) + inst.weight_of(3);
  const double kept = inst.weight_of(0);
  fx.expected = {{"opt", opt},
                 {"eta", 0.0},
                 {"alg:lr", kept},
                 {"alg:lr-prime", kept},
                 {"beta", alpha},
                 {"ratio", (2.0 * alpha + 1.0) - 4.0 * eps / w}};
  // Revoke-Proportional is 1-increasing; it keeps I_1 only when the side
  // intervals are lighter than I_1.
  if (inst.weight_of(1) < kept && inst.weight_of(2) < kept) fx.expected["alg:revoke-prop"] = kept;
  return fx;
}

}  // namespace intsel
