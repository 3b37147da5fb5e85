#include "rainbow/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "rainbow/graph.hpp"

namespace rainbow {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  if (successes > trials) throw ParameterError("wilson_interval: successes exceed trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (phat + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts) {
  ChiSquare out;
  if (counts.size() < 2) return out;
  double total = 0.0;
  for (const auto c : counts) total += static_cast<double>(c);
  if (total == 0.0) return out;
  const double expected = total / static_cast<double>(counts.size());
  for (const auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    out.statistic += d * d / expected;
  }
  out.dof = static_cast<int>(counts.size()) - 1;
  out.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
  return out;
}

double binomial_cdf(int n, double p, int k) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  return boost::math::cdf(boost::math::binomial(n, p), k);
}

}  // namespace rainbow
