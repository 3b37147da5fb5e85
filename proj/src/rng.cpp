#include "rainbow/rng.hpp"

#include <numeric>

namespace rainbow {

namespace {

// FNV-1a over the label bytes.
std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : label) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Seed derive_seed(Seed master, std::string_view label) {
  return mix64(mix64(master) ^ hash_label(label));
}

Seed derive_seed(Seed master, std::uint64_t index) {
  return mix64(mix64(master ^ 0x5bd1e9955bd1e995ULL) + mix64(index));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

int Rng::binomial(int trials, double p) {
  int successes = 0;
  for (int i = 0; i < trials; ++i) successes += bernoulli(p) ? 1 : 0;
  return successes;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm);
  return perm;
}

}  // namespace rainbow
