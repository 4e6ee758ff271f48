#include "cmc/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cmc/errors.hpp"
#include "cmc/quadrature.hpp"

namespace cmc {
namespace {

constexpr int kLastCoeff = 25;  // c_2 .. c_25
constexpr int kMaxDoublings = 12;

double cubic_value(double x, double g2, double g3) { return 4.0 * x * x * x - g2 * x - g3; }

double largest_root(double g2, double g3, double disc) {
  // x^3 + p x + q with p = -g2/4, q = -g3/4.
  const double p = -g2 / 4.0, q = -g3 / 4.0;
  double x;
  if (disc > 0.0) {
    const double r = std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
    x = 2.0 * r * std::cos(std::acos(arg) / 3.0);
  } else {
    const double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double sign = q < 0.0 ? -1.0 : 1.0;
    const double A = -sign * std::cbrt(std::abs(q) / 2.0 + sq);
    x = A == 0.0 ? 0.0 : A - p / (3.0 * A);
  }
  const double d = 12.0 * x * x - g2;
  if (d != 0.0) x -= cubic_value(x, g2, g3) / d;
  return x;
}

}  // namespace

WpEvaluator::WpEvaluator(double g2, double g3) : g2_(g2), g3_(g3) {
  if (!std::isfinite(g2) || !std::isfinite(g3)) fail(ErrorKind::Domain, "non-finite invariants");
  disc_ = g2 * g2 * g2 - 27.0 * g3 * g3;
  if (std::abs(disc_) <= 1e-12 * (std::abs(g2 * g2 * g2) + 27.0 * g3 * g3)) {
    std::ostringstream msg;
    msg << "singular invariants g2=" << g2 << ", g3=" << g3 << " (discriminant " << disc_ << ")";
    fail(ErrorKind::Singular, msg.str());
  }
  e_max_ = largest_root(g2, g3, disc_);

  coeffs_.assign(kLastCoeff - 1, 0.0);
  auto c = [this](int k) -> double& { return coeffs_[static_cast<std::size_t>(k - 2)]; };
  c(2) = g2 / 20.0;
  c(3) = g3 / 28.0;
  for (int k = 4; k <= kLastCoeff; ++k) {
    double sum = 0.0;
    for (int m = 2; m <= k - 2; ++m) sum += c(m) * c(k - m);
    c(k) = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * sum;
  }

  // Root test on the tail of the series.
  double rho = std::numeric_limits<double>::infinity();
  for (int k = kLastCoeff - 5; k <= kLastCoeff; ++k) {
    const double a = std::abs(c(k));
    if (a > 0.0) rho = std::min(rho, std::pow(a, -1.0 / (2.0 * k - 2.0)));
  }
  r0_ = 0.5 * rho;
}

WpValue WpEvaluator::wp_series(double z) const {
  const double z2 = z * z;
  double p = 0.0, dp = 0.0;
  for (int k = kLastCoeff; k >= 2; --k) {
    const double ck = coeffs_[static_cast<std::size_t>(k - 2)];
    p = p * z2 + ck;
    dp = dp * z2 + (2.0 * k - 2.0) * ck;
  }
  // p accumulates sum c_k z^(2k-4); dp sum (2k-2) c_k z^(2k-4).
  return {1.0 / z2 + p * z2, -2.0 / (z2 * z) + dp * z2 / z};
}

WpValue WpEvaluator::wp(double z) const {
  if (z == 0.0) fail(ErrorKind::Pole, "p has a pole at z = 0");
  const double a = std::abs(z);
  int steps = 0;
  double small = a;
  while (small > r0_) {
    small /= 2.0;
    ++steps;
  }
  if (steps > kMaxDoublings) {
    std::ostringstream msg;
    msg << "|z| = " << a << " needs more than " << kMaxDoublings << " duplication steps";
    fail(ErrorKind::Range, msg.str());
  }
  WpValue v = wp_series(small);
  for (int i = 0; i < steps; ++i) {
    if (std::abs(v.pprime) < 1e-14) fail(ErrorKind::Branch, "duplication hit a zero of p'");
    const double slope = (6.0 * v.p * v.p - g2_ / 2.0) / v.pprime;
    const double p2 = slope * slope / 4.0 - 2.0 * v.p;
    const double dp2 = -v.pprime - slope * (p2 - v.p);
    v = {p2, dp2};
  }
  if (z < 0.0) v.pprime = -v.pprime;
  return v;
}

double WpEvaluator::wp_second(double z) const {
  const double p = wp(z).p;
  return 6.0 * p * p - g2_ / 2.0;
}

double WpEvaluator::wp_inverse(double w) const {
  if (!(w >= e_max_)) {
    std::ostringstream msg;
    msg << "w = " << w << " lies below e_max = " << e_max_ << "; no real preimage";
    fail(ErrorKind::Branch, msg.str());
  }
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  // Near the endpoint t = w + tau^2, with the cubic expanded about w so the
  // small-tau radicand does not cancel.
  const double fw = std::max(0.0, cubic_value(w, g2_, g3_));
  const double f1 = 12.0 * w * w - g2_;
  auto near = [&](double tau) {
    const double h = tau * tau;
    const double q = f1 + 12.0 * w * h + 4.0 * h * h;
    if (tau == 0.0) return fw > 0.0 ? 0.0 : 2.0 / std::sqrt(q);
    return 2.0 / std::sqrt(fw / h + q);
  };
  const double a = 1.0 + std::abs(w);
  const double head = integral(near, 0.0, std::sqrt(a), opts);
  // Tail t = w + a / sigma^2, sigma in (0, 1].
  auto tail = [&](double sigma) {
    const double s2 = sigma * sigma;
    const double base = a + w * s2;
    const double rad = 4.0 * base * base * base - g2_ * s2 * s2 * base - g3_ * s2 * s2 * s2;
    return 2.0 * a / std::sqrt(rad);
  };
  const double rest = integral(tail, 0.0, 1.0, opts);
  return head + rest;
}

double WpEvaluator::wp_integral(double t0, double t1) const {
  if (t0 == t1) return 0.0;
  if (std::min(t0, t1) <= 0.0 && std::max(t0, t1) >= 0.0)
    fail(ErrorKind::Pole, "integration interval contains the pole at 0");
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  return integral([this](double t) { return wp(t).p; }, t0, t1, opts);
}

double WpEvaluator::real_half_period() const { return wp_inverse(e_max_); }

}  // namespace cmc
