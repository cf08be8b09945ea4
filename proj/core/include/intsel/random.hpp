#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace intsel {

// Seeded randomness for generators, corruption and permutations. The engine
// is std::mt19937_64, whose output sequence is fixed by the standard; the
// distributions below are written out so results do not change between
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Uniform in [lo, hi).
  double uniform_real(double lo, double hi);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Order-sensitive combination of seed material.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value);
std::uint64_t mix_seed(std::uint64_t seed, std::string_view text);
std::uint64_t mix_seed(std::uint64_t seed, double value);

// Uniformly random permutation of 0..n-1.
std::vector<std::uint32_t> random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace intsel
