#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial, coefficients stored in ascending order.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  static Polynomial monomial(const T& value, int degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = value;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
  }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> c = c_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c = p.c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& p, const T& s) { return s * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Leading coefficient scaled to one. Requires a field.
  Polynomial monic() const {
    if (is_zero()) return {};
    return (T(1) / leading()) * *this;
  }

  /// p(x) -> p(x + shift), by repeated Horner steps.
  Polynomial compose_shift(const T& shift) const {
    Polynomial acc;
    const Polynomial lin{shift, T(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Requires a field and b != 0.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  const T lead = b.leading();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  for (int i = a.degree(); i >= db; --i) {
    const T f = r[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
    r[static_cast<std::size_t>(i)] = T(0);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

/// Monic gcd over an exact field.
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic gcd in floating point. Remainder coefficients below
/// `rel_tol` times the largest dividend coefficient are treated as zero.
inline Polynomial<double> approx_gcd(Polynomial<double> a, Polynomial<double> b,
                                     double rel_tol = 1e-10) {
  auto cleaned = [rel_tol](const Polynomial<double>& r, double scale) {
    std::vector<double> c = r.coeffs();
    for (auto& v : c)
      if (std::abs(v) <= rel_tol * scale) v = 0.0;
    return Polynomial<double>(std::move(c));
  };
  auto max_abs = [](const Polynomial<double>& p) {
    double m = 0.0;
    for (double v : p.coeffs()) m = std::max(m, std::abs(v));
    return m;
  };
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    const double scale = std::max(max_abs(a), max_abs(b));
    auto r = cleaned(divmod(a, b).second, scale);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
double to_double(const T& v) {
  return static_cast<double>(v);
}

/// Evaluates a polynomial with any coefficient type at a double argument.
template <class T>
double eval_double(const Polynomial<T>& p, double x) {
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

/// Exact conversion of a finite double to a rational.
inline Rational exact_rational(double value) {
  if (value == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(value, &exp);
  // 53-bit integer mantissa
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(scaled);
  const int shift = exp - 53;
  if (shift >= 0) {
    r *= Rational(BigInt(1) << shift);
  } else {
    r /= Rational(BigInt(1) << (-shift));
  }
  return r;
}

}  // namespace cmc
