#include <doctest.h>

#include <cmath>
#include <vector>

#include "cmc/errors.hpp"
#include "cmc/profiles.hpp"
#include "cmc/split_complex.hpp"
#include "oracles.hpp"

using namespace cmc;

namespace {

bool near(const SplitComplex& a, const SplitComplex& b, double tol) {
  return std::abs(a.re - b.re) <= tol && std::abs(a.im - b.im) <= tol;
}

SplitComplex random_split() { return {oracle::uniform(-3, 3), oracle::uniform(-3, 3)}; }

}  // namespace

TEST_CASE("split_mul examples") {
  CHECK(split_mul({0, 1}, {0, 1}) == SplitComplex{1, 0});
  CHECK(split_mul({1, 0}, {2.5, -4}) == SplitComplex{2.5, -4});
  CHECK(split_mul({1, 1}, {1, -1}) == SplitComplex{0, 0});
}

TEST_CASE("split_mul commutes and associates") {
  for (int i = 0; i < 200; ++i) {
    const auto a = random_split(), b = random_split(), c = random_split();
    CHECK(near(a * b, b * a, 0.0));
    CHECK(near((a * b) * c, a * (b * c), 1e-13));
  }
}

TEST_CASE("conjugation") {
  for (int i = 0; i < 50; ++i) {
    const auto t = random_split();
    CHECK(t.conj().conj() == t);
    CHECK((t * t.conj()).im == 0.0);
    CHECK((t * t.conj()).re == doctest::Approx(t.modulus2()).epsilon(1e-14));
  }
}

TEST_CASE("inverse off the null cone") {
  const SplitComplex a{2.0, 0.5};
  CHECK(near(a * a.inverse(), {1.0, 0.0}, 1e-15));
  CHECK_THROWS_AS(SplitComplex({1.0, -1.0}).inverse(), Error);
  try {
    (void)SplitComplex{3.0, 3.0}.inverse();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("split_exp") {
  CHECK(split_exp(0.0) == SplitComplex{1, 0});
  CHECK(split_exp(-0.7) == split_exp(0.7).conj());
  CHECK(near(split_exp(0.3) * split_exp(0.5), split_exp(0.8), 1e-15));
  CHECK(split_exp(1.3).modulus2() == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 0; i < 200; ++i) {
    const double a = oracle::uniform(-5, 5), b = oracle::uniform(-5, 5);
    CHECK(near(split_exp(a) * split_exp(b), split_exp(a + b), 1e-12 * std::cosh(a + b)));
  }
  try {
    (void)split_exp(1000.0);
    FAIL("expected a range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Range);
  }
}

TEST_CASE("closed-form Y at B = 0") {
  const double H = 0.8;
  const SplitComplex y = closed_form_y(H, 0.0, 1.7);
  CHECK(y.re == 0.0);
  CHECK(y.im == doctest::Approx(-1.0 / (2.0 * H)));
}

TEST_CASE("closed-form Y solves Y' + 2kHY + 1 = 0") {
  const double H = 0.5, B = 0.5, s = 0.7;
  const SplitComplex y = closed_form_y(H, B, s);
  const double dre = oracle::derivative([&](double t) { return closed_form_y(H, B, t).re; }, s, 0.1);
  const double dim = oracle::derivative([&](double t) { return closed_form_y(H, B, t).im; }, s, 0.1);
  const SplitComplex r = SplitComplex{dre, dim} + 2.0 * H * (kUnitK * y) + 1.0;
  CHECK(std::abs(r.re) < 1e-12);
  CHECK(std::abs(r.im) < 1e-12);
}

TEST_CASE("closed-form Y on a 5x5x5 grid") {
  for (int ih = 0; ih < 5; ++ih) {
    const double H = 0.1 + 1.9 * ih / 4.0;
    for (int ib = 0; ib < 5; ++ib) {
      const double B = 3.0 * ib / 4.0;
      const SInterval d = domain({Family::LorentzSpacelikeAxis, H, B});
      const double half = std::isfinite(d.hi) ? d.hi : 1.0;
      std::vector<double> s;
      for (int is = 0; is < 5; ++is) s.push_back(half * (-0.8 + 0.4 * is));
      const auto samples = sample_ode([&](double t) { return closed_form_y(H, B, t); }, s);
      CHECK(ode_residual(samples, H) < 1e-9);
    }
  }
}

TEST_CASE("Y matches z z' + k z x' of the spacelike-axis profile") {
  const CmcParams p{Family::LorentzSpacelikeAxis, 0.5, 2.0};
  const double s = 0.4;
  const CurveSample c = profile_point(p, s);
  const SplitComplex from_profile{c.second * c.dsecond, c.second * c.dx};
  CHECK(near(from_profile, closed_form_y(p.H, p.B, s), 1e-8));
}

TEST_CASE("ode_residual detects an offset") {
  const double H = 0.5, B = 0.5;
  const std::vector<double> s{0.1, 0.2, 0.3, 0.4};
  const auto exact = sample_ode([&](double t) { return closed_form_y(H, B, t); }, s);
  CHECK(ode_residual(exact, H) < 1e-10);
  const auto shifted = sample_ode([&](double t) { return closed_form_y(H, B, t) + 0.1; }, s);
  CHECK(ode_residual(shifted, H) >= 0.1 * 2.0 * H - 1e-12);
}

TEST_CASE("maximal case Y' + 1 = 0") {
  const std::vector<double> s{-1.0, 0.0, 0.5, 2.0};
  const auto samples = sample_ode([](double t) { return SplitComplex{0.3 - t, 0.2}; }, s);
  CHECK(ode_residual(samples, 0.0) < 1e-9);
}

TEST_CASE("ode_residual needs three samples") {
  const std::vector<double> s{0.1, 0.2};
  const auto samples = sample_ode([](double t) { return SplitComplex{t, 0}; }, s);
  try {
    (void)ode_residual(samples, 1.0);
    FAIL("expected insufficient data");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientData);
  }
}
