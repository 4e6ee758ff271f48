#pragma once

#include <vector>

namespace cmc {

struct WpValue {
  double p = 0.0;
  double pprime = 0.0;
};

/// Weierstrass p-function on the real axis for invariants (g2, g3).
/// Immutable after construction.
class WpEvaluator {
 public:
  /// Throws Error(Singular) when g2^3 - 27 g3^2 vanishes (relative 1e-12).
  WpEvaluator(double g2, double g3);

  double g2() const { return g2_; }
  double g3() const { return g3_; }
  double disc() const { return disc_; }
  /// Largest real root of 4x^3 - g2 x - g3.
  double e_max() const { return e_max_; }
  /// Laurent coefficients c_2 .. c_25 of p(z) - 1/z^2 = sum c_k z^(2k-2).
  const std::vector<double>& laurent_coeffs() const { return coeffs_; }
  /// Radius below which the truncated series is used directly.
  double series_radius() const { return r0_; }

  /// p and p' at real z != 0. Throws Error(Pole) at z = 0 and Error(Branch)
  /// if a duplication step lands on a zero of p'.
  WpValue wp(double z) const;
  /// Truncated Laurent series evaluated at z, no duplication.
  WpValue wp_series(double z) const;
  /// p''(z) = 6 p^2 - g2/2.
  double wp_second(double z) const;
  /// Positive z with p(z) = w, w >= e_max. Throws Error(Branch) below e_max.
  double wp_inverse(double w) const;
  /// Integral of p over [t0, t1]. Throws Error(Pole) if the interval holds 0.
  double wp_integral(double t0, double t1) const;
  /// wp_inverse(e_max): where p' first vanishes on the positive axis.
  double real_half_period() const;

 private:
  double g2_, g3_, disc_, e_max_, r0_;
  std::vector<double> coeffs_;
};

}  // namespace cmc
