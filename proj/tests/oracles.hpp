#pragma once

// Independent numeric references shared by the unit tests.

#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace oracle {

/// Ridders' extrapolated central difference of f at x, starting step h.
inline double derivative(const std::function<double(double)>& f, double x, double h,
                         double* error = nullptr) {
  constexpr int n = 12;
  constexpr double con = 1.4, con2 = con * con;
  double a[n][n];
  a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
  double best = a[0][0], err = std::numeric_limits<double>::infinity();
  for (int i = 1; i < n; ++i) {
    h /= con;
    a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
    double fac = con2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= con2;
      const double e = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
  }
  if (error) *error = err;
  return best;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234abcdULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace oracle
