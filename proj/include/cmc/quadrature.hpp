#pragma once

#include <functional>

namespace cmc {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  /// Absolute floor added to the convergence test; helps integrals that
  /// cancel to ~0.
  double abs_tol = 0.0;
  unsigned max_depth = 18;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (30/61 point) integration over a finite [a, b].
/// Throws Error(Accuracy) carrying the achieved estimate when the
/// requested tolerance is not met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

inline double integral(const std::function<double(double)>& f, double a, double b,
                       const QuadratureOptions& options = {}) {
  return integrate(f, a, b, options).value;
}

}  // namespace cmc
