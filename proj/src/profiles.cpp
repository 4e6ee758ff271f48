#include "cmc/profiles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cmc/errors.hpp"
#include "cmc/quadrature.hpp"

namespace cmc {
namespace {

constexpr double kPi = std::numbers::pi;

// sinh(y)/y, accurate for tiny y.
double sinhc(double y) {
  if (std::abs(y) < 1e-4) return 1.0 + y * y / 6.0;
  return std::sinh(y) / y;
}

// Edge of the finite domain side: s_max for the spacelike axis (B > 0, B != 1),
// s_min for the timelike axis (B > 0).
double spacelike_smax(double H, double B) { return std::acosh((1.0 + B * B) / (2.0 * B)) / (2.0 * H); }
double timelike_smin(double H, double B) { return std::asinh((1.0 - B * B) / (2.0 * B)) / (2.0 * H); }

// Profile radicand, written in product form so it stays accurate near a
// domain edge where it vanishes.
double radicand(const CmcParams& p, double s) {
  const double H = p.H, B = p.B;
  switch (p.family) {
    case Family::LorentzSpacelikeAxis: {
      if (B == 0.0) return 1.0;
      const double smax = spacelike_smax(H, B);
      return 4.0 * B * std::sinh(H * (smax + s)) * std::sinh(H * (smax - s));
    }
    case Family::LorentzTimelikeAxis: {
      const double smin = timelike_smin(H, B);
      return 4.0 * B * std::cosh(H * (s + smin)) * std::sinh(H * (s - smin));
    }
    case Family::Euclidean: {
      if (B == 1.0) {
        const double q = std::sin(H * s + kPi / 4.0);
        return 4.0 * q * q;
      }
      return 1.0 + B * B + 2.0 * B * std::sin(2.0 * H * s);
    }
  }
  return 0.0;
}

void require_in_domain(const CmcParams& params, double s) {
  const SInterval d = domain(params);
  if (!d.contains(s)) {
    std::ostringstream msg;
    msg << "s = " << s << " outside the profile domain of " << to_string(params.family)
        << " (H=" << params.H << ", B=" << params.B << ")";
    fail(ErrorKind::Domain, msg.str());
  }
}

QuadratureOptions quad_options(const ProfileOptions& o) {
  QuadratureOptions q;
  q.rel_tol = o.rel_tol;
  q.abs_tol = 1e-15;
  return q;
}

// Spacelike axis: x(s) = int_0^s (B cosh 2Ht - 1)/sqrt(R) dt with the edge
// substitution t = s_max - tau^2, which removes the 1/sqrt endpoint growth.
double spacelike_axial(const CmcParams& p, double s, const ProfileOptions& o) {
  const double H = p.H, B = p.B;
  if (B == 0.0) return -s;
  const double smax = spacelike_smax(H, B);
  const double a = std::abs(s);
  auto integrand = [&](double tau) {
    const double t = smax - tau * tau;
    const double denom = 4.0 * B * std::sinh(H * (smax + t)) * H * sinhc(H * tau * tau);
    return (B * std::cosh(2.0 * H * t) - 1.0) * 2.0 / std::sqrt(denom);
  };
  const double value = integral(integrand, std::sqrt(smax - a), std::sqrt(smax), quad_options(o));
  return s < 0.0 ? -value : value;
}

// Timelike axis: z(s) = int_{s_ref}^s (B sinh 2Ht - 1)/sqrt(R) dt, with
// t = s_min + tau^2.
double timelike_axial(const CmcParams& p, double s, const ProfileOptions& o) {
  const double H = p.H, B = p.B;
  const double smin = timelike_smin(H, B);
  const double sref = anchor(p, o);
  auto integrand = [&](double tau) {
    const double t = smin + tau * tau;
    const double denom = 4.0 * B * std::cosh(H * (t + smin)) * H * sinhc(H * tau * tau);
    return (B * std::sinh(2.0 * H * t) - 1.0) * 2.0 / std::sqrt(denom);
  };
  return integral(integrand, std::sqrt(sref - smin), std::sqrt(s - smin), quad_options(o));
}

double euclidean_axial(const CmcParams& p, double s, const ProfileOptions& o) {
  const double H = p.H, B = p.B;
  if (B == 0.0) return s;
  auto integrand = [&](double t) {
    return (1.0 + B * std::sin(2.0 * H * t)) / std::sqrt(radicand(p, t));
  };
  const double period = kPi / H;
  if (B != 1.0 && std::abs(s) > period) {
    // x advances by a fixed amount per period of the integrand.
    const double turns = std::floor(s / period);
    const double rest = s - turns * period;
    const double per_period = integral(integrand, 0.0, period, quad_options(o));
    return turns * per_period + integral(integrand, 0.0, rest, quad_options(o));
  }
  return integral(integrand, 0.0, s, quad_options(o));
}

}  // namespace

SInterval domain(const CmcParams& params) {
  validate(params);
  const double H = params.H, B = params.B;
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (params.family) {
    case Family::Euclidean:
      if (B == 1.0) return {-kPi / (4.0 * H), 3.0 * kPi / (4.0 * H), false};
      return {-inf, inf, false};
    case Family::LorentzSpacelikeAxis:
      if (B == 0.0) return {-inf, inf, false};
      if (B == 1.0) return {0.0, 0.0, true};
      {
        const double smax = spacelike_smax(H, B);
        return {-smax, smax, false};
      }
    case Family::LorentzTimelikeAxis:
      if (B == 0.0) fail(ErrorKind::EmptyDomain, "timelike-axis profile is empty for B = 0");
      return {timelike_smin(H, B), inf, false};
  }
  return {};
}

double anchor(const CmcParams& params, const ProfileOptions& options) {
  const SInterval d = domain(params);
  if (d.contains(0.0)) return 0.0;
  if (d.degenerate) fail(ErrorKind::Domain, "degenerate profile domain has no anchor");
  const double delta = options.anchor_delta > 0.0 ? options.anchor_delta : 1e-6 / params.H;
  return d.lo + delta;
}

ProfileJet profile_jet(const CmcParams& params, double s) {
  require_in_domain(params, s);
  const double H = params.H, B = params.B;
  const double R = radicand(params, s);
  const double sq = std::sqrt(R);
  const double R32 = R * sq;
  ProfileJet j;
  j.s = s;
  j.radius = sq / (2.0 * H);
  switch (params.family) {
    case Family::LorentzSpacelikeAxis: {
      const double S = std::sinh(2.0 * H * s), C = std::cosh(2.0 * H * s);
      j.dx = (B * C - 1.0) / sq;
      j.dsecond = -B * S / sq;
      j.ddx = 2.0 * H * B * B * S * (B - C) / R32;
      j.ddsecond = -2.0 * H * B * (C * R + B * S * S) / R32;
      break;
    }
    case Family::LorentzTimelikeAxis: {
      const double S = std::sinh(2.0 * H * s), C = std::cosh(2.0 * H * s);
      j.dx = B * C / sq;
      j.dsecond = (B * S - 1.0) / sq;
      j.ddx = 2.0 * H * B * (B * S - 1.0) * (B + S) / R32;
      j.ddsecond = 2.0 * H * B * B * C * (B + S) / R32;
      break;
    }
    case Family::Euclidean: {
      const double S = std::sin(2.0 * H * s), C = std::cos(2.0 * H * s);
      j.dx = (1.0 + B * S) / sq;
      j.dsecond = B * C / sq;
      j.ddx = 2.0 * H * B * B * C * (B + S) / R32;
      j.ddsecond = -2.0 * H * B * (1.0 + B * S) * (B + S) / R32;
      break;
    }
  }
  return j;
}

CurveSample profile_point(const CmcParams& params, double s, const ProfileOptions& options) {
  const ProfileJet j = profile_jet(params, s);
  CurveSample out;
  out.s = s;
  out.dx = j.dx;
  out.dsecond = j.dsecond;
  switch (params.family) {
    case Family::LorentzSpacelikeAxis:
      out.x = spacelike_axial(params, s, options);
      out.second = j.radius;
      break;
    case Family::LorentzTimelikeAxis:
      out.x = j.radius;
      out.second = timelike_axial(params, s, options);
      break;
    case Family::Euclidean:
      out.x = euclidean_axial(params, s, options);
      out.second = j.radius;
      break;
  }
  return out;
}

std::vector<CurveSample> sample_profile(const CmcParams& params, double s_lo, double s_hi,
                                        std::size_t count, const ProfileOptions& options) {
  if (count < 2) fail(ErrorKind::Usage, "sample count must be at least 2");
  std::vector<CurveSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(profile_point(params, s, options));
  }
  return out;
}

Vec3 surface_from_sample(Family family, const CurveSample& c, double theta) {
  switch (family) {
    case Family::LorentzSpacelikeAxis:
      return {c.x, c.second * std::sinh(theta), c.second * std::cosh(theta)};
    case Family::LorentzTimelikeAxis:
      return {c.x * std::cos(theta), c.x * std::sin(theta), c.second};
    case Family::Euclidean:
      return {c.x, c.second * std::cos(theta), c.second * std::sin(theta)};
  }
  return {};
}

Vec3 surface_point(const CmcParams& params, double s, double theta, const ProfileOptions& options) {
  return surface_from_sample(params.family, profile_point(params, s, options), theta);
}

double mean_curvature_from_jet(Family family, const ProfileJet& j) {
  const double cross = j.dx * j.ddsecond - j.dsecond * j.ddx;
  switch (family) {
    case Family::LorentzSpacelikeAxis:
      return -0.5 * (j.dx / j.radius + cross);
    case Family::LorentzTimelikeAxis:
      return 0.5 * cross + j.dsecond / (2.0 * j.radius);
    case Family::Euclidean:
      return -0.5 * cross + j.dx / (2.0 * j.radius);
  }
  return 0.0;
}

double mean_curvature(const CmcParams& params, double s) {
  return mean_curvature_from_jet(params.family, profile_jet(params, s));
}

double maximal_profile(double c, double x) {
  if (!(c > 0.0)) fail(ErrorKind::Domain, "maximal profile needs c > 0");
  const double z = c * std::cos(x / c);
  if (!(z > 0.0)) fail(ErrorKind::Domain, "maximal profile leaves z > 0");
  return z;
}

double implicit_residual(const CmcParams& params, const Vec3& pt) {
  validate(params);
  const double H = params.H, B = params.B;
  const auto [x1, x2, x3] = pt;
  if (B != 0.0 && B != 1.0)
    fail(ErrorKind::Unsupported, "no implicit polynomial is known for B outside {0, 1}");
  switch (params.family) {
    case Family::LorentzSpacelikeAxis:
      if (B == 0.0) return x3 * x3 - x2 * x2 - 1.0 / (4.0 * H * H);
      return x1 * x1 + x2 * x2 - x3 * x3 + 1.0 / (H * H);
    case Family::LorentzTimelikeAxis:
      if (B == 0.0) fail(ErrorKind::EmptyDomain, "timelike-axis profile is empty for B = 0");
      return x1 * x1 + x2 * x2 - x3 * x3 + 1.0 / (H * H);
    case Family::Euclidean: {
      if (B == 0.0) return x2 * x2 + x3 * x3 - 1.0 / (4.0 * H * H);
      // Centre on the axis below the equator, where y is maximal.
      const double x0 = profile_point(params, kPi / (4.0 * H)).x;
      return (x1 - x0) * (x1 - x0) + x2 * x2 + x3 * x3 - 1.0 / (H * H);
    }
  }
  return 0.0;
}

double SurfaceMesh::s_at(std::size_t i) const {
  return s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(n_s - 1);
}

double SurfaceMesh::theta_at(std::size_t j) const {
  return theta_lo + (theta_hi - theta_lo) * static_cast<double>(j) / static_cast<double>(n_theta - 1);
}

SurfaceMesh mesh(const CmcParams& params, double s_lo, double s_hi, std::size_t n_s,
                 std::size_t n_theta, const MeshOptions& options) {
  if (n_s < 2 || n_theta < 2) fail(ErrorKind::Usage, "mesh needs at least 2 samples per direction");
  const SInterval d = domain(params);
  if (!(s_lo < s_hi) || !d.contains(s_lo) || !d.contains(s_hi))
    fail(ErrorKind::Domain, "mesh s-range must lie inside the profile domain");
  SurfaceMesh m;
  m.params = params;
  m.n_s = n_s;
  m.n_theta = n_theta;
  m.s_lo = s_lo;
  m.s_hi = s_hi;
  if (params.family == Family::LorentzSpacelikeAxis) {
    m.theta_lo = -options.angle_range;
    m.theta_hi = options.angle_range;
  } else {
    m.theta_lo = 0.0;
    m.theta_hi = 2.0 * kPi;
  }
  m.vertices.reserve(n_s * n_theta);
  for (std::size_t i = 0; i < n_s; ++i) {
    const CurveSample c = profile_point(params, m.s_at(i), options.profile);
    for (std::size_t j = 0; j < n_theta; ++j)
      m.vertices.push_back(surface_from_sample(params.family, c, m.theta_at(j)));
  }
  m.quads.reserve((n_s - 1) * (n_theta - 1));
  for (std::size_t i = 0; i + 1 < n_s; ++i)
    for (std::size_t j = 0; j + 1 < n_theta; ++j) {
      const std::size_t a = i * n_theta + j;
      m.quads.push_back({a, a + n_theta, a + n_theta + 1, a + 1});
    }
  return m;
}

std::pair<double, double> default_s_range(const CmcParams& params) {
  const SInterval d = domain(params);
  if (d.degenerate) fail(ErrorKind::Domain, "degenerate profile domain");
  const double H = params.H;
  switch (params.family) {
    case Family::Euclidean:
      if (params.B == 1.0) return {d.lo + 0.01 * (d.hi - d.lo), d.hi - 0.01 * (d.hi - d.lo)};
      return {0.0, kPi / H};
    case Family::LorentzSpacelikeAxis:
      if (params.B == 0.0) return {-1.0 / H, 1.0 / H};
      return {0.95 * d.lo, 0.95 * d.hi};
    case Family::LorentzTimelikeAxis: {
      const double start = anchor(params);
      return {start + 1e-3 / H, start + 2.0 / H};
    }
  }
  return {0.0, 1.0};
}

}  // namespace cmc
