#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "cmc/elliptic_reduction.hpp"
#include "cmc/errors.hpp"
#include "oracles.hpp"

using namespace cmc;

namespace {

using RPoly = Polynomial<Rational>;

// The u-cubics written from their factored forms.
RPoly factored_cubic(Family f, const Rational& B) {
  const Rational one(1);
  switch (f) {
    case Family::LorentzTimelikeAxis:
      return RPoly{one, 0, one} * RPoly{B * B - one, 2 * B};
    case Family::LorentzSpacelikeAxis:
      return RPoly{one + B * B, -2 * B} * RPoly{-one, 0, one};
    case Family::Euclidean:
      return RPoly{one + B * B, 2 * B} * RPoly{one, 0, -one};
  }
  return {};
}

// Roots of the u-cubic, from the factored forms.
std::vector<std::complex<double>> cubic_roots(Family f, double B) {
  using C = std::complex<double>;
  switch (f) {
    case Family::LorentzTimelikeAxis:
      return {C(0, 1), C(0, -1), C((1 - B * B) / (2 * B), 0)};
    case Family::LorentzSpacelikeAxis:
      return {C(1, 0), C(-1, 0), C((1 + B * B) / (2 * B), 0)};
    case Family::Euclidean:
      return {C(1, 0), C(-1, 0), C(-(1 + B * B) / (2 * B), 0)};
  }
  return {};
}

// g2^3 - 27 g3^2 = 16 prod (e_i - e_j)^2 for 4w^3 - g2 w - g3, with
// e_i = (u_i + c) / lambda.
double disc_from_roots(Family f, double B) {
  const ReductionData d = reduce(f, B);
  const auto u = cubic_roots(f, B);
  std::complex<double> e[3];
  for (int i = 0; i < 3; ++i) e[i] = (u[static_cast<std::size_t>(i)] + d.c_shift) / d.lambda;
  const auto p = (e[0] - e[1]) * (e[0] - e[2]) * (e[1] - e[2]);
  return 16.0 * (p * p).real();
}

Rational random_rational() {
  const auto num = static_cast<long>(oracle::uniform(1, 400));
  const auto den = static_cast<long>(oracle::uniform(1, 60));
  return Rational(num, den);
}

}  // namespace

TEST_CASE("timelike B = 1") {
  const ReductionData d = reduce(Family::LorentzTimelikeAxis, 1.0);
  CHECK(d.c_shift == 0.0);
  CHECK(d.l == 0.0);
  CHECK(d.m == 2.0);
  CHECK(d.n == 2.0);
  CHECK(d.g2 == doctest::Approx(-2 * std::cbrt(2.0)).epsilon(1e-15));
  CHECK(d.g3 == 0.0);
  CHECK(d.disc == doctest::Approx(-16.0).epsilon(1e-14));
  CHECK_FALSE(d.singular());
}

TEST_CASE("shift formulas") {
  for (double B : {0.3, 1.0, 2.0, 7.5}) {
    CHECK(reduce(Family::LorentzTimelikeAxis, B).c_shift == doctest::Approx((B * B - 1) / (6 * B)));
    CHECK(reduce(Family::LorentzSpacelikeAxis, B).c_shift == doctest::Approx(-(1 + B * B) / (6 * B)));
    CHECK(reduce(Family::Euclidean, B).c_shift == doctest::Approx((1 + B * B) / (6 * B)));
    CHECK(reduce(Family::LorentzSpacelikeAxis, B).n == -2 * B);
    CHECK(reduce(Family::Euclidean, B).lambda < 0.0);
    CHECK(reduce(Family::Euclidean, B).lambda == doctest::Approx(-std::cbrt(2.0 / B)));
  }
  const auto s = shift_coefficients<Rational>(Family::LorentzSpacelikeAxis, Rational(2));
  CHECK(s.c == Rational(-5, 12));
}

TEST_CASE("family cubics match their factored forms") {
  for (Family f : kAllFamilies)
    for (int i = 0; i < 20; ++i) {
      const Rational B = random_rational();
      const auto a = family_cubic<Rational>(f, B);
      CHECK(RPoly{a[0], a[1], a[2], a[3]} == factored_cubic(f, B));
    }
}

TEST_CASE("shifted cubic identity") {
  CHECK(shifted_cubic_identity(Family::LorentzTimelikeAxis, Rational(3, 2)).is_zero());
  CHECK(shifted_cubic_identity(Family::LorentzSpacelikeAxis, Rational(1, 2)).is_zero());
  CHECK(shifted_cubic_identity(Family::Euclidean, Rational(2)).is_zero());
  for (Family f : kAllFamilies)
    for (int i = 0; i < 30; ++i) CHECK(shifted_cubic_identity(f, random_rational()).is_zero());
}

TEST_CASE("zero quadratic coefficient after the shift") {
  for (Family f : kAllFamilies)
    for (int i = 0; i < 20; ++i) {
      const Rational B = random_rational();
      const auto a = family_cubic<Rational>(f, B);
      const auto s = shift_coefficients<Rational>(f, B);
      // u = w - c
      const RPoly cubic{a[0], a[1], a[2], a[3]};
      const RPoly in_w = cubic.compose_shift(-s.c);
      CHECK(in_w.coeff(2) == 0);
      CHECK(in_w.coeff(0) == s.l);
      CHECK(in_w.coeff(1) == s.m);
      CHECK(in_w.coeff(3) == s.n);
    }
}

TEST_CASE("discriminant: three evaluation paths") {
  for (Family f : kAllFamilies)
    for (int i = 0; i < 50; ++i) {
      const double B = oracle::uniform(0.05, 10.0);
      const ReductionData d = reduce(f, B);
      const double alt = -4 * d.m * d.m * d.m / d.n - 27 * d.l * d.l;
      const double scale = std::abs(d.g2 * d.g2 * d.g2) + 27 * d.g3 * d.g3;
      CHECK(std::abs(d.disc - alt) <= 1e-12 * scale);
      CHECK(std::abs(d.disc - disc_from_roots(f, B)) <= 1e-10 * scale);
      const DiscPoly p = discriminant_poly(f);
      CHECK(std::abs(p.evaluate(B) - d.disc) <= 1e-10 * std::abs(d.disc) + 1e-12 * scale);
    }
}

TEST_CASE("timelike discriminant closed form") {
  const DiscPoly p = discriminant_poly(Family::LorentzTimelikeAxis);
  for (int i = 0; i < 20; ++i) {
    const Rational B = random_rational();
    const Rational a = 12 * B * B - (B * B - 1) * (B * B - 1);
    const Rational b = 36 * B * B * (B * B - 1) + (B * B - 1) * (B * B - 1) * (B * B - 1);
    const Rational closed = -(a * a * a + b * b) / (108 * B * B * B * B);
    CHECK(p.evaluate(B) == closed);
  }
  CHECK(p.evaluate(Rational(1)) == -16);
}

TEST_CASE("discriminant numerators in lowest terms") {
  // timelike: -(B^2 + 1)^4 / B^2; spacelike and Euclidean: (B^2 - 1)^4 / B^2
  const RPoly sq_plus{1, 0, 1}, sq_minus{-1, 0, 1};
  const RPoly plus4 = sq_plus * sq_plus * sq_plus * sq_plus;
  const RPoly minus4 = sq_minus * sq_minus * sq_minus * sq_minus;
  const DiscPoly t = discriminant_poly(Family::LorentzTimelikeAxis);
  CHECK(t.numerator == -plus4);
  CHECK(t.denominator_coeff == 1);
  CHECK(t.denominator_power == 2);
  CHECK(discriminant_poly(Family::LorentzSpacelikeAxis).numerator == minus4);
  CHECK(discriminant_poly(Family::Euclidean).numerator == minus4);
  for (Family f : kAllFamilies) {
    const DiscPoly d = discriminant_poly(f);
    const auto& c = d.numerator.coeffs();
    CHECK(std::equal(c.begin(), c.end(), c.rbegin()));
  }
}

TEST_CASE("Euclidean discriminant does not vanish away from B = 1") {
  const DiscPoly p = discriminant_poly(Family::Euclidean);
  for (int i = 1; i <= 49; ++i) {
    const double B = 0.1 * i;
    if (i == 10) continue;
    CHECK(p.evaluate(B) != 0.0);
    CHECK(p.evaluate(B) > 0.0);
  }
  CHECK(sturm_count(p.numerator, Rational(0), Rational(1, 2)) == 0);
  CHECK(sturm_count(p.numerator, Rational(3, 2), std::nullopt) == 0);
}

TEST_CASE("Sturm counts") {
  // (x - 1)(x - 2)(x + 3)
  const RPoly p = RPoly{-1, 1} * RPoly{-2, 1} * RPoly{3, 1};
  CHECK(sturm_count(p, std::nullopt, std::nullopt) == 3);
  CHECK(sturm_count(p, Rational(0), std::nullopt) == 2);
  CHECK(sturm_count(p, Rational(1), Rational(2)) == 1);  // (1, 2]
  CHECK(sturm_count(p, Rational(-4), Rational(0)) == 1);
  // repeated roots count once
  const RPoly q = RPoly{-1, 1} * RPoly{-1, 1} * RPoly{1, 0, 1};
  CHECK(sturm_count(q, std::nullopt, std::nullopt) == 1);
  CHECK_THROWS_AS(sturm_count(RPoly{}, std::nullopt, std::nullopt), Error);
}

TEST_CASE("positive real roots") {
  const RPoly p = RPoly{Rational(-1, 3), 1} * RPoly{-5, 1} * RPoly{1, 0, 1} * RPoly{2, 1};
  const auto r = positive_real_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(5.0).epsilon(1e-12));

  // Random products of distinct linear factors.
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> want;
    RPoly poly = RPoly::constant(1);
    for (int i = 0; i < 4; ++i) {
      const Rational root = random_rational() / 10;
      if (std::find(want.begin(), want.end(), static_cast<double>(root)) != want.end()) continue;
      want.push_back(static_cast<double>(root));
      poly = poly * RPoly{-root, 1};
    }
    poly = poly * RPoly{3, 1};
    std::sort(want.begin(), want.end());
    const auto got = positive_real_roots(poly);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
  }
}

TEST_CASE("singular B values") {
  CHECK(singular_B(Family::LorentzTimelikeAxis).empty());
  const auto sp = singular_B(Family::LorentzSpacelikeAxis);
  REQUIRE(sp.size() == 1);
  CHECK(sp[0] == doctest::Approx(1.0));
  CHECK(reduce(Family::LorentzSpacelikeAxis, 1.0).singular());
  CHECK(reduce(Family::Euclidean, 1.0).singular());
  CHECK_FALSE(reduce(Family::LorentzTimelikeAxis, 0.620969).singular());
}

TEST_CASE("sign-flipped diagnostic") {
  // 4m^3/n - 27 l^2 has the pair of roots B and 1/B near 0.620969.
  const auto r = positive_real_roots(sign_flipped_discriminant_poly(Family::LorentzTimelikeAxis).numerator);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(0.620968712860787).epsilon(1e-12));
  CHECK(r[0] * r[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduce rejects B = 0") {
  try {
    (void)reduce(Family::LorentzTimelikeAxis, 0.0);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}
