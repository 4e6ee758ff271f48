#pragma once

#include <string_view>

namespace cmc {

/// Which ambient space and rotation axis a CMC surface of revolution uses.
///
/// - Euclidean: profile (x, y) in E^3, rotated about the x-axis.
/// - LorentzSpacelikeAxis: profile (x, z) in E_1^3, rotated about the x-axis,
///   surface (x, z sinh t, z cosh t).
/// - LorentzTimelikeAxis: profile (x, z) in E_1^3, rotated about the z-axis,
///   surface (x cos t, x sin t, z).
enum class Family { Euclidean, LorentzSpacelikeAxis, LorentzTimelikeAxis };

inline constexpr Family kAllFamilies[] = {
    Family::Euclidean, Family::LorentzSpacelikeAxis, Family::LorentzTimelikeAxis};

/// CLI spelling: "euclidean", "spacelike-axis", "timelike-axis".
std::string_view to_string(Family family);

/// Accepts the CLI spelling plus the short aliases "spacelike"/"timelike".
/// Throws Error(Usage) on anything else.
Family parse_family(std::string_view text);

inline bool is_lorentz(Family f) { return f != Family::Euclidean; }

/// Physical input: mean curvature H and classifying parameter B >= 0.
/// B = 0 is the cylinder; B = 1 the sphere / hyperboloid case.
struct CmcParams {
  Family family = Family::Euclidean;
  double H = 1.0;
  double B = 0.0;
};

/// Throws Error(Domain) unless H > 0, B >= 0 and both are finite.
void validate(const CmcParams& params);

}  // namespace cmc
