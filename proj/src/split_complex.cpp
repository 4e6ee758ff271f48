#include "cmc/split_complex.hpp"

#include <algorithm>
#include <cmath>

#include "cmc/errors.hpp"

namespace cmc {

SplitComplex SplitComplex::inverse() const {
  const double m = modulus2();
  if (m == 0.0) fail(ErrorKind::Domain, "split-complex number on the null cone has no inverse");
  return {re / m, -im / m};
}

SplitComplex split_exp(double theta) {
  const double c = std::cosh(theta);
  if (!std::isfinite(c)) fail(ErrorKind::Range, "split_exp argument overflows");
  return {c, std::sinh(theta)};
}

SplitComplex closed_form_y(double H, double B, double s) {
  if (!(H > 0.0)) fail(ErrorKind::Domain, "closed_form_y requires H > 0");
  // Division by 2kH is multiplication by k/(2H) because k^{-1} = k.
  const SplitComplex e = split_exp(-2.0 * H * s);
  const SplitComplex numer = B * e + (-1.0);
  return (1.0 / (2.0 * H)) * (kUnitK * numer);
}

double ode_step(double s) { return std::max(1e-6, 1e-6 * std::abs(s)); }

std::vector<ProfileOdeSample> sample_ode(const std::function<SplitComplex(double)>& y,
                                         std::span<const double> s_values) {
  std::vector<ProfileOdeSample> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    const double h = ode_step(s);
    const SplitComplex plus = y(s + h);
    const SplitComplex minus = y(s - h);
    out.push_back({s, y(s), (1.0 / (2.0 * h)) * (plus - minus)});
  }
  return out;
}

double ode_residual(std::span<const ProfileOdeSample> samples, double H) {
  if (samples.size() < 3) fail(ErrorKind::InsufficientData, "ode_residual needs at least 3 samples");
  double worst = 0.0;
  for (const auto& smp : samples) {
    const SplitComplex r = smp.dy + (2.0 * H) * (kUnitK * smp.y) + 1.0;
    worst = std::max({worst, std::abs(r.re), std::abs(r.im)});
  }
  return worst;
}

}  // namespace cmc
