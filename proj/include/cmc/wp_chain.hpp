#pragma once

#include <string>
#include <vector>

#include "cmc/elliptic_reduction.hpp"
#include "cmc/family.hpp"
#include "cmc/polynomial.hpp"
#include "cmc/weierstrass.hpp"

namespace cmc {

/// Constants of the p-parametrization of one profile:
///   dt/dx3 = 1/(alpha + beta p(t)),  r = (2H x)^2 = c1 + c2 p(t),
/// with p(t) = (u(s) + c_shift) / lambda.
struct ChainConfig {
  Family family = Family::LorentzTimelikeAxis;
  double H = 1.0;
  double B = 0.0;
  double g2 = 0.0, g3 = 0.0;
  double alpha = 0.0, beta = 0.0;
  double c1 = 0.0, c2 = 0.0;
  double lambda = 0.0;
  double p = 0.0, q = 0.0;
  double c_shift = 0.0;
};

/// Throws Error(Singular) for a vanishing discriminant, Error(Domain) for H <= 0.
ChainConfig chain_config(const ReductionData& data, double H);

/// Rational function num(P)/den(P) in the indeterminate P = p(t). Kept with
/// a monic denominator and common factors removed.
template <class T>
struct PRational {
  Polynomial<T> num;
  Polynomial<T> den = Polynomial<T>::constant(T(1));
};

/// d^k r / dx3^k = rat(p) * p'^(k mod 2).
template <class T>
struct ChainTermT {
  int k = 1;
  PRational<T> rat;
  bool has_wp_prime = true;
};
using ChainTerm = ChainTermT<double>;
using ExactChainTerm = ChainTermT<Rational>;

inline constexpr int kDefaultChainMax = 12;

/// Terms k = 1..upto_k. Throws Error(Range) when upto_k is outside [1, max_k].
std::vector<ChainTerm> differentiate_chain(const ChainConfig& cfg, int upto_k,
                                           int max_k = kDefaultChainMax);
/// Same chain with every double of cfg converted exactly to a rational.
std::vector<ExactChainTerm> differentiate_chain_exact(const ChainConfig& cfg, int upto_k,
                                                      int max_k = kDefaultChainMax);

/// Throws Error(Pole) when |den(p(t))| < 1e-12.
double eval_chain_term(const ChainTerm& term, const WpEvaluator& ev, double t);

struct WpCurve {
  double t = 0.0;
  double t0 = 0.0;
  double x = 0.0;
  double z = 0.0;
};

/// Profile point rebuilt from p on the branch t in (-omega, 0), where p' > 0.
/// Propagates Error(Branch) when (u(s) + c)/lambda falls below e_max.
WpCurve curve_from_wp(const ChainConfig& cfg, const CmcParams& params, double s);
WpCurve curve_from_wp(const ChainConfig& cfg, const WpEvaluator& ev, const CmcParams& params,
                      double s);

struct ProbeTerm {
  int k = 0;
  int num_degree = -1;
  int den_degree = 0;
  /// "odd" when the term carries p', else "even".
  std::string parity;
  double min_abs_value = 0.0;
  bool identically_zero = false;
};

struct ProbeReport {
  Family family = Family::LorentzTimelikeAxis;
  double H = 0.0;
  double B = 0.0;
  std::vector<ProbeTerm> terms;

  bool any_identically_zero() const;
};

/// Exact non-vanishing test of each numerator for k = 1..K plus evaluation at
/// five points of (0, omega). K must lie in [3, 12].
ProbeReport polynomiality_probe(const ChainConfig& cfg, int K);

}  // namespace cmc
