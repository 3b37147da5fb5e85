#pragma once

#include <vector>

namespace rainbow {

/// E[m_r]: expected number of colors of [kn] that occur exactly r times
/// in a multiset of `alpha_n` i.i.d. uniform draws from [kn].
/// Evaluated through log-gamma; requires 0 <= r <= alpha_n and kn >= 2.
double expected_m_r(int k, int n, int alpha_n, int r);

/// kn * C(alpha_n, r) * (kn)^-r, an upper bound on E[m_{>=r}].
double expected_m_geq_r_upper(int k, int n, int alpha_n, int r);

/// Smallest positive r with 2 k^-r <= eps^2 / 2.
int compute_r0(double eps, int k);

/// r_0 with the small-alpha case folded in: alpha <= eps / 2 gives 1.
int compute_r0_for_alpha(double eps, int k, double alpha);

enum class TailSide { kLower, kUpper };

/// Chernoff bounds for a binomial-like X with mean mu:
///   lower: P(X <= (1 - a) mu) <= exp(-a^2 mu / 2), a > 0
///   upper: P(X >= (1 + a) mu) <= exp(-a^2 mu / 3), 0 < a < 1
double chernoff_tail(double mu, double a, TailSide side);

/// 4 exp(-t^2 / (8 c^2 r E)) for 0 <= t <= E and c, r > 0.
double talagrand_tail(double expectation, double c, double r, double t);

struct MultiplicityProfile {
  int k = 0;
  int n = 0;
  int alpha_n = 0;
  /// mu[r] for r = 0..alpha_n.
  std::vector<double> mu;

  double alpha() const { return static_cast<double>(alpha_n) / n; }
  /// Compensated sum of r * mu[r] over 1..r_max (clamped to alpha_n).
  double weighted_mass(int r_max) const;
};

MultiplicityProfile multiplicity_profile(int k, int n, int alpha_n);

}  // namespace rainbow
