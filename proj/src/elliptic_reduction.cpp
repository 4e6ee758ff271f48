#include "cmc/elliptic_reduction.hpp"

#include <cmath>
#include <sstream>

#include "cmc/errors.hpp"

namespace cmc {
namespace {

// Laurent polynomial in B: sum_i p_i B^(i + low).
struct Laurent {
  Polynomial<Rational> p;
  int low = 0;

  static Laurent of(Polynomial<Rational> poly, int low = 0) { return {std::move(poly), low}; }
};

Laurent align(const Laurent& a, int low) {
  // Re-express a with a smaller lowest exponent.
  return {a.p * Polynomial<Rational>::monomial(Rational(1), a.low - low), low};
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.p.is_zero()) return b;
  if (b.p.is_zero()) return a;
  const int low = std::min(a.low, b.low);
  return {align(a, low).p + align(b, low).p, low};
}
Laurent operator-(const Laurent& a) { return {-a.p, a.low}; }
Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
Laurent operator*(const Laurent& a, const Laurent& b) { return {a.p * b.p, a.low + b.low}; }
Laurent operator*(long s, const Laurent& a) { return {Rational(s) * a.p, a.low}; }

// The family's shift written as Laurent polynomials in B.
ShiftCoefficients<Laurent> laurent_shift(Family family) {
  using P = Polynomial<Rational>;
  const Laurent one = Laurent::of(P{Rational(1)});
  const Laurent B = Laurent::of(P{Rational(0), Rational(1)});
  const Laurent B2 = B * B;
  // 1/(6B)
  const Laurent inv6B = Laurent::of(P{Rational(1, 6)}, -1);
  ShiftCoefficients<Laurent> s;
  switch (family) {
    case Family::LorentzTimelikeAxis: {
      const Laurent c = (B2 - one) * inv6B;
      s.c = c;
      s.l = B2 - one - 2 * B * c + (B2 - one) * c * c - 2 * B * c * c * c;
      s.m = 2 * B - 2 * c * (B2 - one) + 6 * B * c * c;
      s.n = 2 * B;
      break;
    }
    case Family::LorentzSpacelikeAxis: {
      const Laurent c = -((one + B2) * inv6B);
      s.c = c;
      s.l = -(B2 + one) - 2 * B * c + (B2 + one) * c * c + 2 * B * c * c * c;
      s.m = 2 * B - 2 * c * (B2 + one) - 6 * B * c * c;
      s.n = -2 * B;
      break;
    }
    case Family::Euclidean: {
      const Laurent c = (one + B2) * inv6B;
      s.c = c;
      s.l = (one + B2) - 2 * B * c - (one + B2) * c * c + 2 * B * c * c * c;
      s.m = 2 * B + 2 * (one + B2) * c - 6 * B * c * c;
      s.n = -2 * B;
      break;
    }
  }
  return s;
}

using RPoly = Polynomial<Rational>;

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::vector<RPoly> sturm_sequence(const RPoly& p) {
  std::vector<RPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    RPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

// Sign of p at x, or at +/-infinity when x is empty.
int sign_at(const RPoly& p, const std::optional<Rational>& x, bool at_plus_inf) {
  if (x) return sign_of(p(*x));
  const int lead = sign_of(p.leading());
  if (at_plus_inf || p.degree() % 2 == 0) return lead;
  return -lead;
}

int variations(const std::vector<RPoly>& seq, const std::optional<Rational>& x, bool at_plus_inf) {
  int count = 0, prev = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x, at_plus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

RPoly square_free(const RPoly& p) {
  const RPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

}  // namespace

bool ReductionData::singular() const {
  return std::abs(disc) <= 1e-12 * (std::abs(g2 * g2 * g2) + 27.0 * g3 * g3);
}

ReductionData reduce(Family family, double B) {
  if (!(B > 0.0) || !std::isfinite(B)) {
    std::ostringstream msg;
    msg << "reduction needs B > 0 (got " << B << ")";
    fail(ErrorKind::Domain, msg.str());
  }
  const auto s = shift_coefficients<double>(family, B);
  ReductionData d;
  d.family = family;
  d.B = B;
  d.c_shift = s.c;
  d.l = s.l;
  d.m = s.m;
  d.n = s.n;
  d.lambda = std::cbrt(4.0 / s.n);
  d.g2 = -s.m * d.lambda;
  d.g3 = -s.l;
  d.disc = d.g2 * d.g2 * d.g2 - 27.0 * d.g3 * d.g3;
  return d;
}

Polynomial<Rational> shifted_cubic_identity(Family family, const Rational& B) {
  const auto s = shift_coefficients<Rational>(family, B);
  const auto a = family_cubic<Rational>(family, B);
  const RPoly w{s.c, Rational(1)};
  const RPoly shifted = RPoly::constant(s.l) + s.m * w + s.n * (w * w * w);
  return shifted - RPoly{a[0], a[1], a[2], a[3]};
}

Rational DiscPoly::evaluate(const Rational& B) const {
  Rational den = denominator_coeff;
  for (int i = 0; i < denominator_power; ++i) den *= B;
  for (int i = 0; i > denominator_power; --i) den /= B;
  return numerator(B) / den;
}

double DiscPoly::evaluate(double B) const {
  const double den = static_cast<double>(denominator_coeff) * std::pow(B, denominator_power);
  return eval_double(numerator, B) / den;
}

namespace {

DiscPoly build_disc(Family family, long g2_cube_sign) {
  const auto s = laurent_shift(family);
  // 1/n for n = +-2B.
  const Rational n_lead = s.n.p.leading();
  const int n_power = s.n.low + s.n.p.degree();
  const Laurent inv_n = Laurent::of(RPoly{Rational(1) / n_lead}, -n_power);
  Laurent disc = (-4 * g2_cube_sign) * (s.m * s.m * s.m * inv_n) - 27 * (s.l * s.l);

  std::vector<Rational> c = disc.p.coeffs();
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const int low = disc.low + static_cast<int>(zeros);

  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& v : c) {
    if (v == 0) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(v));
    const BigInt d = boost::multiprecision::denominator(v);
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
  }
  num_gcd = boost::multiprecision::abs(num_gcd);
  const Rational content(num_gcd, den_lcm);
  for (auto& v : c) v /= content;

  DiscPoly out;
  out.family = family;
  out.numerator = RPoly(std::move(c));
  out.denominator_coeff = Rational(1) / content;
  out.denominator_power = -low;
  return out;
}

}  // namespace

DiscPoly discriminant_poly(Family family) { return build_disc(family, 1); }

DiscPoly sign_flipped_discriminant_poly(Family family) { return build_disc(family, -1); }

int sturm_count(const Polynomial<Rational>& p, std::optional<Rational> a, std::optional<Rational> b) {
  if (p.is_zero()) fail(ErrorKind::Domain, "Sturm count of the zero polynomial");
  const auto seq = sturm_sequence(square_free(p));
  return variations(seq, a, false) - variations(seq, b, true);
}

std::vector<double> positive_real_roots(const Polynomial<Rational>& p_in) {
  if (p_in.is_zero()) fail(ErrorKind::Domain, "roots of the zero polynomial");
  std::vector<Rational> c = p_in.coeffs();
  while (!c.empty() && c.front() == 0) c.erase(c.begin());
  const RPoly p = square_free(RPoly(std::move(c)));
  if (p.degree() <= 0) return {};
  const auto seq = sturm_sequence(p);
  auto count = [&](const Rational& a, const Rational& b) {
    return variations(seq, a, false) - variations(seq, b, false);
  };

  // Cauchy bound on root magnitude.
  Rational bound(0);
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = boost::multiprecision::abs(p.coeff(i) / p.leading());
    if (r > bound) bound = r;
  }
  bound += 1;

  // Split (0, bound] until every piece holds at most one root.
  std::vector<std::pair<Rational, Rational>> pending{{Rational(0), bound}}, isolated;
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    const int k = count(a, b);
    if (k == 0) continue;
    if (k == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    const Rational mid = (a + b) / 2;
    pending.emplace_back(a, mid);
    pending.emplace_back(mid, b);
  }

  const Rational width(1, 1000000000);
  const RPoly dp = p.derivative();
  std::vector<double> roots;
  for (auto [a, b] : isolated) {
    // The single root lies in (a, b]; p changes sign across it.
    Rational root;
    bool exact = false;
    if (p(b) == 0) {
      root = b;
      exact = true;
    } else {
      const int sb = sign_of(p(b));
      while (b - a > width) {
        const Rational mid = (a + b) / 2;
        const int sm = sign_of(p(mid));
        if (sm == 0) {
          root = mid;
          exact = true;
          break;
        }
        if (sm == sb) {
          b = mid;
        } else {
          a = mid;
        }
      }
      if (!exact) root = (a + b) / 2;
    }
    double x = static_cast<double>(root);
    if (!exact) {
      const double d = eval_double(dp, x);
      if (d != 0.0) {
        const double polished = x - eval_double(p, x) / d;
        if (polished > static_cast<double>(a) && polished <= static_cast<double>(b)) x = polished;
      }
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> singular_B(Family family) {
  return positive_real_roots(discriminant_poly(family).numerator);
}

}  // namespace cmc
