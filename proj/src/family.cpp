#include "cmc/family.hpp"

#include <cmath>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Euclidean: return "euclidean";
    case Family::LorentzSpacelikeAxis: return "spacelike-axis";
    case Family::LorentzTimelikeAxis: return "timelike-axis";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  if (text == "euclidean") return Family::Euclidean;
  if (text == "spacelike-axis" || text == "spacelike") return Family::LorentzSpacelikeAxis;
  if (text == "timelike-axis" || text == "timelike") return Family::LorentzTimelikeAxis;
  fail(ErrorKind::Usage, "unknown family '" + std::string(text) + "'");
}

void validate(const CmcParams& params) {
  if (!std::isfinite(params.H) || !(params.H > 0.0))
    fail(ErrorKind::Domain, "mean curvature H must be finite and positive");
  if (!std::isfinite(params.B) || params.B < 0.0)
    fail(ErrorKind::Domain, "parameter B must be finite and non-negative");
}

}  // namespace cmc
