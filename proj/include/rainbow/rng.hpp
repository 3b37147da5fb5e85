#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace rainbow {

using Seed = std::uint64_t;

/// SplitMix64 finalizer. Used both for seed derivation and for
/// counter-based coin flips that must be replayable individually.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed for a named phase. Identical (master, label) pairs give
// identical streams on every platform.
Seed derive_seed(Seed master, std::string_view label);
Seed derive_seed(Seed master, std::uint64_t index);

// Thin wrapper over mt19937_64. The bounded-integer and real draws are
// implemented here rather than through <random> distributions, whose
// output is implementation-defined; this keeps trial files bit-identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}
  Rng(Seed master, std::string_view label) : engine_(derive_seed(master, label)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  bool coin() { return (next() >> 63) != 0; }

  /// Sum of `trials` independent Bernoulli(p) draws.
  int binomial(int trials, double p);

  /// Partial Fisher-Yates: the first `count` entries of `items` become a
  /// uniformly random ordered sample without replacement.
  template <typename T>
  void partial_shuffle(std::span<T> items, std::size_t count) {
    for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
      const auto j = i + below(items.size() - i);
      std::swap(items[i], items[j]);
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    partial_shuffle(std::span<T>(items), items.size());
  }

  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rainbow
