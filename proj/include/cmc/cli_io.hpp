#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cmc/family.hpp"
#include "cmc/profiles.hpp"

namespace cmc {

enum class Command { Profile, Surface, Reduce, Roots, WpCheck, Chain, Verify };

std::string_view to_string(Command c);
/// Throws Error(Usage) for unknown names.
Command parse_command(std::string_view text);

struct RunConfig {
  Command command = Command::Verify;
  std::optional<Family> family;
  double H = 1.0;
  double B = 0.0;
  std::optional<double> s_min, s_max;
  std::size_t samples = 101;
  std::size_t theta_samples = 33;
  double angle_range = 2.0;
  double tol = 1e-10;
  /// Derivative-chain order for the chain command.
  int order = 8;
  /// Empty writes to standard output.
  std::string out;
  /// Empty picks the command's natural format.
  std::string format;
};

/// Throws Error(Usage) on invalid combinations.
void validate(const RunConfig& cfg);

/// Shortest round-trip decimal text of a double.
std::string format_number(double v);

void write_profile_csv(std::ostream& out, const std::vector<CurveSample>& samples);
/// OBJ with one "v" per vertex and two triangles per quad.
void write_obj(std::ostream& out, const SurfaceMesh& mesh);

/// Executes one command. Returns 0 on success, 1 on library errors (error
/// JSON on err), 2 on usage errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv with the flags --family, --H, --B, --s-min, --s-max,
/// --samples, --theta-samples, --angle-range, --tol, --order, --out,
/// --format and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmc
