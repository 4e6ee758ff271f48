#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cmc {

/// Split-complex (hyperbolic) number re + k*im with k*k = +1.
struct SplitComplex {
  double re = 0.0;
  double im = 0.0;

  constexpr SplitComplex conj() const { return {re, -im}; }
  /// re^2 - im^2; negative off the "positive" cone, zero on the null cone.
  constexpr double modulus2() const { return re * re - im * im; }

  /// Defined only off the null cone; throws Error(Domain) there.
  SplitComplex inverse() const;

  constexpr SplitComplex& operator+=(const SplitComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr SplitComplex& operator-=(const SplitComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend constexpr bool operator==(const SplitComplex&, const SplitComplex&) = default;
};

inline constexpr SplitComplex kUnitK{0.0, 1.0};

constexpr SplitComplex split_mul(const SplitComplex& a, const SplitComplex& b) {
  return {a.re * b.re + a.im * b.im, a.re * b.im + a.im * b.re};
}

constexpr SplitComplex operator*(const SplitComplex& a, const SplitComplex& b) {
  return split_mul(a, b);
}
constexpr SplitComplex operator*(double s, const SplitComplex& a) { return {s * a.re, s * a.im}; }
constexpr SplitComplex operator+(SplitComplex a, const SplitComplex& b) { return a += b; }
constexpr SplitComplex operator-(SplitComplex a, const SplitComplex& b) { return a -= b; }
constexpr SplitComplex operator+(SplitComplex a, double r) { return {a.re + r, a.im}; }

/// e^{k theta} = cosh(theta) + k sinh(theta). Throws Error(Range) on overflow.
SplitComplex split_exp(double theta);

/// Closed-form solution of Y' + 2kHY + 1 = 0 with the phase fixed to zero:
/// Y(s) = (B e^{-2kHs} - 1) k / (2H), i.e. ((-B sinh 2Hs), (B cosh 2Hs - 1)) / (2H).
/// This is z z' + k z x' for the spacelike-axis profile.
SplitComplex closed_form_y(double H, double B, double s);

struct ProfileOdeSample {
  double s = 0.0;
  SplitComplex y;
  SplitComplex dy;
};

/// Central-difference step used for dY: max(1e-6, 1e-6 |s|).
double ode_step(double s);

/// Builds samples of a Y(s) curve, differentiating numerically with ode_step.
std::vector<ProfileOdeSample> sample_ode(const std::function<SplitComplex(double)>& y,
                                         std::span<const double> s_values);

/// max over samples of max(|re|, |im|) of dY + 2kH Y + 1. With H = 0 this is
/// the residual of Y' + 1 = 0. Throws Error(InsufficientData) below 3 samples.
double ode_residual(std::span<const ProfileOdeSample> samples, double H);

}  // namespace cmc
