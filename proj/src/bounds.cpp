#include "rainbow/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

namespace {

double log_choose(int n, int r) {
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

void check_multiplicity_args(int k, int n, int alpha_n, int r, const char* who) {
  if (k < 1 || n < 1 || static_cast<long long>(k) * n < 2) {
    throw ParameterError(std::string(who) + ": need kn >= 2");
  }
  if (alpha_n < 0 || r < 0 || r > alpha_n) throw ParameterError(std::string(who) + ": need 0 <= r <= alpha_n");
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double expected_m_r(int k, int n, int alpha_n, int r) {
  check_multiplicity_args(k, n, alpha_n, r, "expected_m_r");
  const double kn = static_cast<double>(k) * n;
  const double log_value = std::log(kn) + log_choose(alpha_n, r) - r * std::log(kn) +
                           (alpha_n - r) * std::log1p(-1.0 / kn);
  return std::exp(log_value);
}

double expected_m_geq_r_upper(int k, int n, int alpha_n, int r) {
  check_multiplicity_args(k, n, alpha_n, r, "expected_m_geq_r_upper");
  const double kn = static_cast<double>(k) * n;
  return std::exp(std::log(kn) + log_choose(alpha_n, r) - r * std::log(kn));
}

int compute_r0(double eps, int k) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("compute_r0: eps must lie in (0, 1)");
  if (k < 2) throw ParameterError("compute_r0: k must be at least 2");
  const double goal = eps * eps / 2.0;
  int r = 1;
  // Equality at the boundary counts; allow for rounding in eps * eps.
  while (2.0 * std::pow(static_cast<double>(k), -r) > goal * (1.0 + 1e-12)) ++r;
  return r;
}

int compute_r0_for_alpha(double eps, int k, double alpha) {
  if (alpha <= eps / 2.0) {
    if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("compute_r0: eps must lie in (0, 1)");
    return 1;
  }
  return compute_r0(eps, k);
}

double chernoff_tail(double mu, double a, TailSide side) {
  if (mu < 0.0) throw ParameterError("chernoff_tail: mu must be non-negative");
  if (side == TailSide::kLower) {
    if (!(a > 0.0)) throw ParameterError("chernoff_tail: lower side needs a > 0");
    return std::exp(-a * a * mu / 2.0);
  }
  if (!(a > 0.0 && a < 1.0)) throw ParameterError("chernoff_tail: upper side needs 0 < a < 1");
  return std::exp(-a * a * mu / 3.0);
}

double talagrand_tail(double expectation, double c, double r, double t) {
  if (!(c > 0.0 && r > 0.0)) throw ParameterError("talagrand_tail: c and r must be positive");
  if (!(t >= 0.0 && t <= expectation)) throw ParameterError("talagrand_tail: need 0 <= t <= E");
  if (t == 0.0) return 4.0;
  return 4.0 * std::exp(-t * t / (8.0 * c * c * r * expectation));
}

double MultiplicityProfile::weighted_mass(int r_max) const {
  CompensatedSum acc;
  const int top = std::min(r_max, alpha_n);
  for (int r = 1; r <= top; ++r) acc.add(r * mu[static_cast<std::size_t>(r)]);
  return acc.value();
}

MultiplicityProfile multiplicity_profile(int k, int n, int alpha_n) {
  MultiplicityProfile prof;
  prof.k = k;
  prof.n = n;
  prof.alpha_n = alpha_n;
  prof.mu.resize(static_cast<std::size_t>(alpha_n) + 1);
  for (int r = 0; r <= alpha_n; ++r) prof.mu[static_cast<std::size_t>(r)] = expected_m_r(k, n, alpha_n, r);
  return prof;
}

}  // namespace rainbow
