#include "cmc/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cmc/errors.hpp"

namespace cmc {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  if (a == b) return {};
  // Work on [-1, 1]; Boost's per-panel error floor does not scale with a
  // short interval length otherwise.
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  auto mapped = [&](double x) { return f(mid + half * x); };
  double error = 0.0;
  double l1 = 0.0;
  double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      mapped, -1.0, 1.0, options.max_depth, options.rel_tol, &error, &l1);
  value *= half;
  error *= std::abs(half);
  l1 *= std::abs(half);
  if (!std::isfinite(value)) fail(ErrorKind::Accuracy, "quadrature produced a non-finite value");
  // Boost stops at max_depth without signalling; the estimate is checked here.
  const double allowed = 10.0 * options.rel_tol * l1 + options.abs_tol;
  if (error > allowed && error > 1e3 * std::numeric_limits<double>::epsilon() * l1) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << error;
    throw Error(ErrorKind::Accuracy, msg.str(), error);
  }
  return {value, error};
}

}  // namespace cmc
