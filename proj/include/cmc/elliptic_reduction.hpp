#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cmc/family.hpp"
#include "cmc/polynomial.hpp"

namespace cmc {

/// Substitution data of one family at one B: the u-cubic a0 + a1 u + a2 u^2
/// + a3 u^3 is rewritten as l + m w + n w^3 with w = u + c_shift, then scaled
/// by lambda = cbrt(4/n) into 4 w~^3 - g2 w~ - g3.
struct ReductionData {
  Family family = Family::LorentzTimelikeAxis;
  double B = 0.0;
  double c_shift = 0.0;
  double l = 0.0;
  double m = 0.0;
  double n = 0.0;
  double lambda = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double disc = 0.0;

  /// Relative test |disc| <= 1e-12 (|g2|^3 + 27 g3^2).
  bool singular() const;
};

/// Coefficients (a0, a1, a2, a3) of the family's cubic in u, where u is
/// sinh 2Ht (timelike axis), cosh 2Ht (spacelike axis) or sin 2Ht (Euclidean).
template <class T>
std::array<T, 4> family_cubic(Family family, const T& B) {
  const T one(1);
  switch (family) {
    case Family::LorentzTimelikeAxis:
      return {B * B - one, 2 * B, B * B - one, 2 * B};
    case Family::LorentzSpacelikeAxis:
      return {-(one + B * B), 2 * B, one + B * B, -2 * B};
    case Family::Euclidean:
      return {one + B * B, 2 * B, -(one + B * B), -2 * B};
  }
  return {};
}

template <class T>
struct ShiftCoefficients {
  T c, l, m, n;
};

/// Closed forms of the shift and the depressed coefficients, family by family.
template <class T>
ShiftCoefficients<T> shift_coefficients(Family family, const T& B) {
  const T one(1);
  const T B2 = B * B;
  ShiftCoefficients<T> s;
  switch (family) {
    case Family::LorentzTimelikeAxis: {
      const T c = (B2 - one) / (6 * B);
      s.c = c;
      s.l = B2 - one - 2 * B * c + (B2 - one) * c * c - 2 * B * c * c * c;
      s.m = 2 * B - 2 * c * (B2 - one) + 6 * B * c * c;
      s.n = 2 * B;
      break;
    }
    case Family::LorentzSpacelikeAxis: {
      const T c = -(one + B2) / (6 * B);
      s.c = c;
      s.l = -(B2 + one) - 2 * B * c + (B2 + one) * c * c + 2 * B * c * c * c;
      s.m = 2 * B - 2 * c * (B2 + one) - 6 * B * c * c;
      s.n = -2 * B;
      break;
    }
    case Family::Euclidean: {
      const T c = (one + B2) / (6 * B);
      s.c = c;
      s.l = (one + B2) - 2 * B * c - (one + B2) * c * c + 2 * B * c * c * c;
      s.m = 2 * B + 2 * (one + B2) * c - 6 * B * c * c;
      s.n = -2 * B;
      break;
    }
  }
  return s;
}

/// Throws Error(Domain) unless B > 0 and finite.
ReductionData reduce(Family family, double B);

/// Expands l + m w + n w^3 at w = u + c in exact arithmetic and subtracts the
/// family cubic. The result is the zero polynomial when the reduction is right.
Polynomial<Rational> shifted_cubic_identity(Family family, const Rational& B);

/// disc(B) = numerator(B) / (denominator_coeff * B^denominator_power), with the
/// numerator an integer polynomial, primitive, and not divisible by B.
struct DiscPoly {
  Family family = Family::LorentzTimelikeAxis;
  Polynomial<Rational> numerator;
  Rational denominator_coeff{1};
  int denominator_power = 0;

  Rational evaluate(const Rational& B) const;
  double evaluate(double B) const;
};

/// -4 m^3 / n - 27 l^2 as an exact rational function of B.
DiscPoly discriminant_poly(Family family);

/// 4 m^3 / n - 27 l^2, i.e. the discriminant with g2 of the opposite sign.
/// Diagnostic only.
DiscPoly sign_flipped_discriminant_poly(Family family);

/// Number of distinct real roots of p in (a, b]. Infinite bounds are allowed.
/// p must be nonzero.
int sturm_count(const Polynomial<Rational>& p, std::optional<Rational> a,
                std::optional<Rational> b);

/// Distinct positive real roots of p, sorted, refined to 1e-9 by bisection
/// and polished by one Newton step.
std::vector<double> positive_real_roots(const Polynomial<Rational>& p);

/// Positive real B at which the family's discriminant vanishes.
std::vector<double> singular_B(Family family);

}  // namespace cmc
