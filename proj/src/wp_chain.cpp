#include "cmc/wp_chain.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "cmc/errors.hpp"
#include "cmc/profiles.hpp"

namespace cmc {
namespace {

bool negligible(const Rational& v, const Rational&) { return v == 0; }
bool negligible(double v, double scale) { return std::abs(v) <= 1e-9 * scale; }

template <class T>
T magnitude(const Polynomial<T>& p) {
  T m(0);
  for (const auto& v : p.coeffs()) m = std::max(m, T(v < T(0) ? -v : v));
  return m;
}

// Root r when den = lead * (P - r)^j with j >= 1.
template <class T>
std::optional<T> single_root(const Polynomial<T>& den) {
  const int j = den.degree();
  if (j < 1) return std::nullopt;
  const T r = -den.coeff(j - 1) / (T(j) * den.leading());
  Polynomial<T> power = Polynomial<T>::constant(den.leading());
  for (int i = 0; i < j; ++i) power = power * Polynomial<T>{-r, T(1)};
  const T scale = magnitude(den);
  for (int i = 0; i <= j; ++i)
    if (!negligible(T(power.coeff(i) - den.coeff(i)), scale)) return std::nullopt;
  return r;
}

Polynomial<Rational> general_gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
  return gcd(a, b);
}

// Floating gcd, accepted only when it divides both inputs to high accuracy.
Polynomial<double> general_gcd(const Polynomial<double>& a, const Polynomial<double>& b) {
  Polynomial<double> g = approx_gcd(a, b);
  if (g.degree() <= 0) return Polynomial<double>::constant(1.0);
  auto divides = [&g](const Polynomial<double>& p) {
    return magnitude(divmod(p, g).second) <= 1e-9 * magnitude(p);
  };
  if (!divides(a) || !divides(b)) return Polynomial<double>::constant(1.0);
  return g;
}

// gcd(num, den). Chain denominators are powers of the linear alpha + beta P,
// where the gcd is (P - r)^i with i the multiplicity of r in num.
template <class T>
Polynomial<T> reduce_gcd(const Polynomial<T>& num, const Polynomial<T>& den) {
  const auto r = single_root(den);
  if (!r) return general_gcd(num, den);
  const Polynomial<T> factor{-*r, T(1)};
  Polynomial<T> g = Polynomial<T>::constant(T(1));
  Polynomial<T> rest = num;
  const T scale = magnitude(num);
  for (int i = 0; i < den.degree() && rest.degree() >= 1; ++i) {
    auto [quot, rem] = divmod(rest, factor);
    if (!negligible(rem.coeff(0), scale)) break;
    rest = quot;
    g = g * factor;
  }
  return g;
}

template <class T>
PRational<T> normalized(Polynomial<T> num, Polynomial<T> den) {
  if (num.is_zero()) return {Polynomial<T>{}, Polynomial<T>::constant(T(1))};
  const Polynomial<T> g = reduce_gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const T lead = den.leading();
  return {(T(1) / lead) * num, den.monic()};
}

template <class T>
struct ChainBasis {
  Polynomial<T> D;       // alpha + beta P
  Polynomial<T> f;       // 4P^3 - g2 P - g3
  Polynomial<T> second;  // 6P^2 - g2/2
};

template <class T>
ChainBasis<T> basis(const T& alpha, const T& beta, const T& g2, const T& g3) {
  ChainBasis<T> b;
  b.D = Polynomial<T>{alpha, beta};
  b.f = Polynomial<T>{-g3, -g2, T(0), T(4)};
  b.second = Polynomial<T>{-g2 / T(2), T(0), T(6)};
  return b;
}

template <class T>
std::vector<ChainTermT<T>> run_chain(const T& alpha, const T& beta, const T& g2, const T& g3,
                                     const T& c2, int upto_k, int max_k) {
  if (upto_k < 1 || upto_k > max_k) {
    std::ostringstream msg;
    msg << "chain order " << upto_k << " outside [1, " << max_k << "]";
    fail(ErrorKind::Range, msg.str());
  }
  const ChainBasis<T> b = basis(alpha, beta, g2, g3);
  std::vector<ChainTermT<T>> out;
  ChainTermT<T> term;
  term.k = 1;
  term.has_wp_prime = true;
  term.rat = normalized(Polynomial<T>::constant(c2), b.D);
  out.push_back(term);
  for (int k = 2; k <= upto_k; ++k) {
    const auto& prev = out.back();
    const Polynomial<T>& N = prev.rat.num;
    const Polynomial<T>& M = prev.rat.den;
    // R' = (N' M - N M') / M^2
    const Polynomial<T> dnum = N.derivative() * M - N * M.derivative();
    const Polynomial<T> dden = M * M;
    ChainTermT<T> next;
    next.k = k;
    if (prev.has_wp_prime) {
      // d/dx3 [R p'] = (R' f + R p'') / D
      next.rat = normalized(dnum * b.f + N * M * b.second, dden * b.D);
      next.has_wp_prime = false;
    } else {
      // d/dx3 [R] = R' p' / D
      next.rat = normalized(dnum, dden * b.D);
      next.has_wp_prime = true;
    }
    out.push_back(std::move(next));
  }
  return out;
}

double u_of(Family family, double H, double s) {
  switch (family) {
    case Family::LorentzTimelikeAxis:
      return std::sinh(2.0 * H * s);
    case Family::LorentzSpacelikeAxis:
      return std::cosh(2.0 * H * s);
    case Family::Euclidean:
      return std::sin(2.0 * H * s);
  }
  return 0.0;
}

}  // namespace

ChainConfig chain_config(const ReductionData& data, double H) {
  if (!(H > 0.0) || !std::isfinite(H)) fail(ErrorKind::Domain, "chain configuration needs H > 0");
  if (data.singular()) {
    std::ostringstream msg;
    msg << "discriminant vanishes at B = " << data.B << "; p does not exist";
    fail(ErrorKind::Singular, msg.str());
  }
  ChainConfig cfg;
  cfg.family = data.family;
  cfg.H = H;
  cfg.B = data.B;
  cfg.g2 = data.g2;
  cfg.g3 = data.g3;
  cfg.lambda = data.lambda;
  cfg.c_shift = data.c_shift;
  cfg.q = data.B;
  const double B = data.B, c = data.c_shift, lam = data.lambda;
  switch (data.family) {
    case Family::LorentzTimelikeAxis:
      cfg.p = 1.0 + B * c;
      cfg.c1 = B * B - 2.0 * B * c - 1.0;
      cfg.c2 = 2.0 * B * lam;
      break;
    case Family::LorentzSpacelikeAxis:
      cfg.p = 1.0 + B * c;
      cfg.c1 = 1.0 + B * B + 2.0 * B * c;
      cfg.c2 = -2.0 * B * lam;
      break;
    case Family::Euclidean:
      cfg.p = B * c - 1.0;
      cfg.c1 = 1.0 + B * B - 2.0 * B * c;
      cfg.c2 = 2.0 * B * lam;
      break;
  }
  cfg.alpha = -cfg.p * lam / (2.0 * H);
  cfg.beta = B * lam * lam / (2.0 * H);
  return cfg;
}

std::vector<ChainTerm> differentiate_chain(const ChainConfig& cfg, int upto_k, int max_k) {
  return run_chain<double>(cfg.alpha, cfg.beta, cfg.g2, cfg.g3, cfg.c2, upto_k, max_k);
}

std::vector<ExactChainTerm> differentiate_chain_exact(const ChainConfig& cfg, int upto_k, int max_k) {
  return run_chain<Rational>(exact_rational(cfg.alpha), exact_rational(cfg.beta),
                             exact_rational(cfg.g2), exact_rational(cfg.g3),
                             exact_rational(cfg.c2), upto_k, max_k);
}

double eval_chain_term(const ChainTerm& term, const WpEvaluator& ev, double t) {
  const WpValue v = ev.wp(t);
  const double den = term.rat.den(v.p);
  if (std::abs(den) < 1e-12) {
    std::ostringstream msg;
    msg << "chain term k=" << term.k << " has a pole near t = " << t;
    fail(ErrorKind::Pole, msg.str());
  }
  const double value = term.rat.num(v.p) / den;
  return term.has_wp_prime ? value * v.pprime : value;
}

WpCurve curve_from_wp(const ChainConfig& cfg, const CmcParams& params, double s) {
  return curve_from_wp(cfg, WpEvaluator(cfg.g2, cfg.g3), params, s);
}

WpCurve curve_from_wp(const ChainConfig& cfg, const WpEvaluator& ev, const CmcParams& params,
                      double s) {
  const SInterval d = domain(params);
  if (!d.contains(s)) fail(ErrorKind::Domain, "s outside the profile domain");
  const double s_ref = anchor(params);
  const double H = params.H;
  const double w = (u_of(cfg.family, H, s) + cfg.c_shift) / cfg.lambda;
  const double w_ref = (u_of(cfg.family, H, s_ref) + cfg.c_shift) / cfg.lambda;
  WpCurve out;
  out.t = -ev.wp_inverse(w);
  out.t0 = -ev.wp_inverse(w_ref);
  const double radicand = cfg.c1 + cfg.c2 * ev.wp(out.t).p;
  if (radicand < 0.0) fail(ErrorKind::Domain, "negative radicand c1 + c2 p(t)");
  out.x = std::sqrt(radicand) / (2.0 * H);
  out.z = cfg.alpha * (out.t - out.t0) + cfg.beta * ev.wp_integral(out.t0, out.t);
  return out;
}

bool ProbeReport::any_identically_zero() const {
  for (const auto& t : terms)
    if (t.identically_zero) return true;
  return false;
}

ProbeReport polynomiality_probe(const ChainConfig& cfg, int K) {
  if (K < 3 || K > kDefaultChainMax) fail(ErrorKind::Range, "probe order must lie in [3, 12]");
  const auto exact = differentiate_chain_exact(cfg, K);
  const WpEvaluator ev(cfg.g2, cfg.g3);
  const double omega = ev.real_half_period();
  ProbeReport report;
  report.family = cfg.family;
  report.H = cfg.H;
  report.B = cfg.B;
  for (const auto& term : exact) {
    ProbeTerm pt;
    pt.k = term.k;
    pt.num_degree = term.rat.num.degree();
    pt.den_degree = term.rat.den.degree();
    pt.parity = term.has_wp_prime ? "odd" : "even";
    pt.identically_zero = term.rat.num.is_zero();
    std::vector<double> num, den;
    for (const auto& c : term.rat.num.coeffs()) num.push_back(static_cast<double>(c));
    for (const auto& c : term.rat.den.coeffs()) den.push_back(static_cast<double>(c));
    ChainTerm numeric{term.k, {Polynomial<double>(num), Polynomial<double>(den)}, term.has_wp_prime};
    double min_abs = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 5; ++i) {
      const double t = omega * (0.15 * i);
      min_abs = std::min(min_abs, std::abs(eval_chain_term(numeric, ev, t)));
    }
    pt.min_abs_value = min_abs;
    report.terms.push_back(pt);
  }
  return report;
}

}  // namespace cmc
