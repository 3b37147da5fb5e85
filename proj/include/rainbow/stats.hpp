#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace rainbow {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
};

/// Wilson score interval for `successes` out of `trials`.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

/// Half the L1 distance between two empirical laws given as outcome counts.
template <typename Key>
double tv_distance(const std::map<Key, std::uint64_t>& a, const std::map<Key, std::uint64_t>& b) {
  std::uint64_t na = 0;
  std::uint64_t nb = 0;
  for (const auto& [key, c] : a) na += c;
  for (const auto& [key, c] : b) nb += c;
  if (na == 0 || nb == 0) return 1.0;
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += static_cast<double>(ia->second) / na;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += static_cast<double>(ib->second) / nb;
      ++ib;
    } else {
      const double d = static_cast<double>(ia->second) / na - static_cast<double>(ib->second) / nb;
      sum += d < 0 ? -d : d;
      ++ia;
      ++ib;
    }
  }
  return sum / 2.0;
}

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Goodness of fit of observed counts against the uniform law.
ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts);

/// P(Bin(n, p) <= k), summed exactly.
double binomial_cdf(int n, double p, int k);

}  // namespace rainbow
