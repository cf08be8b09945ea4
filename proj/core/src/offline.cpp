#include "intsel/offline.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace intsel {

namespace {

// Canonical processing order: by finish, then start, then id.
std::vector<IntervalId> canonical_order(const Instance& instance) {
  std::vector<IntervalId> order(instance.size());
  std::iota(order.begin(), order.end(), IntervalId{0});
  const auto& iv = instance.intervals();
  std::sort(order.begin(), order.end(), [&](IntervalId a, IntervalId b) {
    if (iv[a].finish != iv[b].finish) return iv[a].finish < iv[b].finish;
    if (iv[a].start != iv[b].start) return iv[a].start < iv[b].start;
    return a < b;
  });
  return order;
}

CanonicalSolution finish(const Instance& instance, std::vector<IntervalId> ids) {
  std::sort(ids.begin(), ids.end());
  CanonicalSolution out;
  for (IntervalId id : ids) out.value += instance.weight_of(id);
  out.member_ids = std::move(ids);
  return out;
}

}  // namespace

bool CanonicalSolution::contains(IntervalId id) const {
  return std::binary_search(member_ids.begin(), member_ids.end(), id);
}

CanonicalSolution opt_unit(const Instance& instance) {
  if (instance.weight_model() != WeightModel::Unit) {
    throw std::invalid_argument("opt_unit requires a unit-weight instance");
  }
  std::vector<IntervalId> chosen;
  bool have_last = false;
  double last_finish = 0.0;
  for (IntervalId id : canonical_order(instance)) {
    const Interval& iv = instance[id];
    if (!have_last || iv.start >= last_finish) {
      chosen.push_back(id);
      last_finish = iv.finish;
      have_last = true;
    }
  }
  return finish(instance, std::move(chosen));
}

CanonicalSolution opt_weighted(const Instance& instance) {
  const std::vector<IntervalId> order = canonical_order(instance);
  const std::size_t n = order.size();

  std::vector<double> finishes(n);
  for (std::size_t j = 0; j < n; ++j) finishes[j] = instance[order[j]].finish;

  // pred[j]: number of sorted intervals that finish no later than interval j
  // starts. Only positions before j can qualify since finish_j > start_j.
  std::vector<std::size_t> pred(n);
  std::vector<double> best(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double start = instance[order[j]].start;
    pred[j] = static_cast<std::size_t>(
        std::upper_bound(finishes.begin(), finishes.begin() + static_cast<std::ptrdiff_t>(j),
                         start) -
        finishes.begin());
    const double take = instance.weight_of(order[j]) + best[pred[j]];
    best[j + 1] = std::max(best[j], take);
  }

  std::vector<IntervalId> chosen;
  std::size_t j = n;
  while (j > 0) {
    const std::size_t k = j - 1;
    const double take = instance.weight_of(order[k]) + best[pred[k]];
    if (take > best[k]) {
      chosen.push_back(order[k]);
      j = pred[k];
    } else {
      j = k;
    }
  }
  return finish(instance, std::move(chosen));
}

CanonicalSolution canonical_opt(const Instance& instance) {
  return instance.weight_model() == WeightModel::Unit ? opt_unit(instance)
                                                      : opt_weighted(instance);
}

double brute_force_opt(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kBruteForceMaxSize) {
    throw SizeGuardError("brute_force_opt is limited to " + std::to_string(kBruteForceMaxSize) +
                         " intervals, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> conflict_mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && conflicts(instance[static_cast<IntervalId>(a)],
                              instance[static_cast<IntervalId>(b)])) {
        conflict_mask[a] |= std::uint32_t{1} << b;
      }
    }
  }
  double best = 0.0;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool feasible = true;
    double value = 0.0;
    for (std::size_t i = 0; i < n && feasible; ++i) {
      if ((mask >> i) & 1U) {
        feasible = (conflict_mask[i] & mask) == 0;
        value += instance.weight_of(static_cast<IntervalId>(i));
      }
    }
    if (feasible) best = std::max(best, value);
  }
  return best;
}

}  // namespace intsel
