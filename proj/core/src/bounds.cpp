#include "intsel/bounds.hpp"

#include <algorithm>
#include <limits>

namespace intsel {

namespace {

BoundCheck additive(const RunOutcome& o) {
  BoundCheck b;
  b.name = "alg>=opt-eta";
  b.limit = o.opt - o.eta;
  b.holds = o.alg >= b.limit - kBoundTolerance * std::max(1.0, o.opt);
  return b;
}

BoundCheck ratio(std::string name, double limit, const RunOutcome& o, bool conjecture = false) {
  BoundCheck b;
  b.name = std::move(name);
  b.limit = limit;
  b.conjecture = conjecture;
  b.holds = o.opt <= (limit + kBoundTolerance) * o.alg;
  return b;
}

}  // namespace

double competitive_ratio(double opt, double alg) {
  if (alg > 0.0) return opt / alg;
  return opt > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
}

std::vector<BoundCheck> check_bounds(const PolicyConfig& config, WeightModel model,
                                     const RunOutcome& o) {
  std::vector<BoundCheck> out;
  const double k = static_cast<double>(o.distinct_lengths);
  switch (config.algorithm) {
    case Algorithm::Naive:
      out.push_back(additive(o));
      break;
    case Algorithm::RevokeUnit:
      if (model != WeightModel::Unit) break;
      if (config.inherit_marks) {
        out.push_back(additive(o));
        out.push_back(ratio("ratio<=2k+1", 2.0 * k + 1.0, o));
      } else {
        out.push_back(ratio("ratio<=3k", 3.0 * k, o));
      }
      break;
    case Algorithm::BK2K:
      if (model == WeightModel::Unit) out.push_back(ratio("ratio<=2k", 2.0 * k, o));
      break;
    case Algorithm::LR:
    case Algorithm::LRPrime:
      if (config.beta >= kGoldenRatio) {
        out.push_back(ratio("ratio<=2beta+1", 2.0 * config.beta + 1.0, o,
                            config.algorithm == Algorithm::LRPrime));
      }
      break;
    case Algorithm::RevokeProportional: {
      const double l = config.lambda;
      if (config.prediction_threshold != 1.0) break;
      out.push_back(ratio("ratio<=(4l^2+2l)/(l-1)", (4.0 * l * l + 2.0 * l) / (l - 1.0), o));
      if (o.eta == 0.0) out.push_back(ratio("ratio<=3l/(l-1)", 3.0 * l / (l - 1.0), o));
      break;
    }
    case Algorithm::GrNR:
    case Algorithm::RevokePropHalf:
      break;
  }
  return out;
}

}  // namespace intsel
