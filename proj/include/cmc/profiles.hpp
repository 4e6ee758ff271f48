#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "cmc/family.hpp"

namespace cmc {

using Vec3 = std::array<double, 3>;

/// Open arc-length interval (lo, hi); either end may be infinite.
/// `degenerate` marks the spacelike-axis B = 1 case, where the radicand is
/// positive nowhere and the interval collapses to the single point s = 0.
struct SInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool degenerate = false;

  bool contains(double s) const { return !degenerate && lo < s && s < hi; }
};

/// Maximal open interval around the base point on which the profile
/// radicand is strictly positive. Throws Error(EmptyDomain) for the
/// timelike axis with B = 0.
SInterval domain(const CmcParams& params);

struct ProfileOptions {
  double rel_tol = 1e-10;
  /// Offset of the quadrature anchor from a finite domain edge (timelike
  /// axis, B <= 1). Zero selects the default 1e-6 / H.
  double anchor_delta = 0.0;
};

/// Arc length at which the integrated coordinate is zero: s = 0 where
/// admissible, otherwise the lower domain edge plus anchor_delta.
double anchor(const CmcParams& params, const ProfileOptions& options = {});

/// One point of the unit-speed generating curve. `second` is z for the
/// Lorentz families and y for the Euclidean one.
struct CurveSample {
  double s = 0.0;
  double x = 0.0;
  double second = 0.0;
  double dx = 0.0;
  double dsecond = 0.0;
};

/// Closed-form local data: the coordinate measuring distance from the axis
/// plus first and second derivatives of both coordinates. No quadrature.
struct ProfileJet {
  double s = 0.0;
  double radius = 0.0;
  double dx = 0.0;
  double dsecond = 0.0;
  double ddx = 0.0;
  double ddsecond = 0.0;
};

ProfileJet profile_jet(const CmcParams& params, double s);

/// Throws Error(Domain) outside domain(params) and Error(Accuracy) when the
/// profile integral does not converge.
CurveSample profile_point(const CmcParams& params, double s, const ProfileOptions& options = {});

std::vector<CurveSample> sample_profile(const CmcParams& params, double s_lo, double s_hi,
                                        std::size_t count, const ProfileOptions& options = {});

/// Parametric surface of revolution for the family at (s, theta).
Vec3 surface_from_sample(Family family, const CurveSample& sample, double theta);
Vec3 surface_point(const CmcParams& params, double s, double theta,
                   const ProfileOptions& options = {});

/// Mean curvature of the rotation of a profile jet. Orientation is the one
/// that gives +H for the families as parametrized; reversing the curve
/// (dx, dsecond -> -dx, -dsecond) flips the sign.
double mean_curvature_from_jet(Family family, const ProfileJet& jet);
double mean_curvature(const CmcParams& params, double s);

/// Generating curve z = c cos(x/c) of the maximal (H = 0) surface about the
/// spacelike axis. Throws Error(Domain) where z <= 0.
double maximal_profile(double c, double x);

/// Implicit polynomial of the algebraic cases evaluated at a point:
///   spacelike axis, B = 0:  x3^2 - x2^2 - 1/(4H^2)
///   spacelike axis, B = 1:  x1^2 + x2^2 - x3^2 + 1/H^2
///   timelike axis,  B = 1:  x1^2 + x2^2 - x3^2 + 1/H^2
///   Euclidean,      B = 0:  x2^2 + x3^2 - 1/(4H^2)
///   Euclidean,      B = 1:  (x1 - x0)^2 + x2^2 + x3^2 - 1/H^2, x0 = x at the equator
/// Throws Error(Unsupported) for other B, Error(EmptyDomain) for timelike B = 0.
double implicit_residual(const CmcParams& params, const Vec3& point);

struct MeshOptions {
  /// Half-width of the hyperbolic-angle window for spacelike-axis meshes.
  double angle_range = 2.0;
  ProfileOptions profile;
};

struct SurfaceMesh {
  CmcParams params;
  std::size_t n_s = 0;
  std::size_t n_theta = 0;
  double s_lo = 0.0, s_hi = 0.0;
  double theta_lo = 0.0, theta_hi = 0.0;
  /// Row-major: vertex (i, j) lives at i * n_theta + j.
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 4>> quads;

  double s_at(std::size_t i) const;
  double theta_at(std::size_t j) const;
};

SurfaceMesh mesh(const CmcParams& params, double s_lo, double s_hi, std::size_t n_s,
                 std::size_t n_theta, const MeshOptions& options = {});

/// A comfortable closed sub-range of the domain used by the CLI defaults.
std::pair<double, double> default_s_range(const CmcParams& params);

}  // namespace cmc
