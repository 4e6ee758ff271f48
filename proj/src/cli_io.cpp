#include "cmc/cli_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmc/elliptic_reduction.hpp"
#include "cmc/errors.hpp"
#include "cmc/verify.hpp"
#include "cmc/weierstrass.hpp"
#include "cmc/wp_chain.hpp"

namespace cmc {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::Profile, "profile"},
    {Command::Surface, "surface"},
    {Command::Reduce, "reduce"},
    {Command::Roots, "roots"},
    {Command::WpCheck, "wp-check"},
    {Command::Chain, "chain"},
    {Command::Verify, "verify"},
}};

std::string_view description(Command c) {
  switch (c) {
    case Command::Profile:
      return "Sample the generating curve as CSV";
    case Command::Surface:
      return "Mesh the surface of revolution as OBJ";
    case Command::Reduce:
      return "Weierstrass invariants of the profile cubic";
    case Command::Roots:
      return "Positive roots of the discriminant numerator";
    case Command::WpCheck:
      return "Residuals of the p-function identities";
    case Command::Chain:
      return "Polynomiality probe of the derivative chain";
    case Command::Verify:
      return "Run the acceptance checks";
  }
  return "";
}

std::string_view natural_format(Command c) {
  switch (c) {
    case Command::Profile:
      return "csv";
    case Command::Surface:
      return "obj";
    case Command::Verify:
      return "text";
    default:
      return "json";
  }
}

[[noreturn]] void usage(const std::string& what) { fail(ErrorKind::Usage, what); }

CmcParams params_of(const RunConfig& cfg) { return {*cfg.family, cfg.H, cfg.B}; }

std::pair<double, double> s_range(const RunConfig& cfg) {
  auto range = default_s_range(params_of(cfg));
  if (cfg.s_min) range.first = *cfg.s_min;
  if (cfg.s_max) range.second = *cfg.s_max;
  if (!(range.first < range.second)) usage("--s-min must be below --s-max");
  return range;
}

json reduction_json(const ReductionData& d) {
  return {{"family", to_string(d.family)}, {"B", d.B},         {"c", d.c_shift},
          {"l", d.l},                      {"m", d.m},         {"n", d.n},
          {"lambda", d.lambda},            {"g2", d.g2},       {"g3", d.g3},
          {"disc", d.disc},                {"singular", d.singular()}};
}

json roots_json(Family family) {
  const DiscPoly dp = discriminant_poly(family);
  json roots = json::array();
  for (double B : singular_B(family)) {
    roots.push_back({{"B", B},
                     {"numerator_residual", std::abs(eval_double(dp.numerator, B))},
                     {"disc", dp.evaluate(B)}});
  }
  return {{"family", to_string(family)},
          {"numerator_degree", dp.numerator.degree()},
          {"positive_root_count", sturm_count(dp.numerator, Rational(0), std::nullopt)},
          {"roots", roots}};
}

json wp_check_json(const RunConfig& cfg) {
  const ReductionData d = reduce(*cfg.family, cfg.B);
  const WpEvaluator ev(d.g2, d.g3);
  const double omega = ev.real_half_period();
  const std::size_t n = cfg.samples;
  double ode = 0.0, parity = 0.0, inverse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = omega * (0.05 + 0.9 * static_cast<double>(i) / static_cast<double>(n - 1));
    const WpValue v = ev.wp(z), m = ev.wp(-z);
    const double f = 4.0 * v.p * v.p * v.p - d.g2 * v.p - d.g3;
    ode = std::max(ode, std::abs(v.pprime * v.pprime - f) / (1.0 + std::abs(v.p * v.p * v.p)));
    parity = std::max({parity, std::abs(v.p - m.p), std::abs(v.pprime + m.pprime)});
    inverse = std::max(inverse, std::abs(ev.wp_inverse(v.p) - z) / z);
  }
  // p(2z; g2/16, g3/64) = p(z; g2, g3) / 4
  const WpEvaluator scaled(d.g2 / 16.0, d.g3 / 64.0);
  const double z = 0.3 * omega;
  const double homog = std::abs(scaled.wp(2.0 * z).p - ev.wp(z).p / 4.0) / std::abs(ev.wp(z).p / 4.0);
  return {{"family", to_string(d.family)},
          {"B", d.B},
          {"g2", d.g2},
          {"g3", d.g3},
          {"disc", d.disc},
          {"e_max", ev.e_max()},
          {"real_half_period", omega},
          {"series_radius", ev.series_radius()},
          {"samples", n},
          {"ode_residual", ode},
          {"parity_residual", parity},
          {"inverse_roundtrip", inverse},
          {"homogeneity_residual", homog}};
}

json probe_json(const ProbeReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"k", t.k},
                     {"num_degree", t.num_degree},
                     {"den_degree", t.den_degree},
                     {"parity", t.parity},
                     {"min_abs_value", t.min_abs_value}});
  }
  return {{"family", to_string(r.family)}, {"H", r.H}, {"B", r.B}, {"terms", terms}};
}

void emit(std::ostream& out, const RunConfig& cfg) {
  ProfileOptions popts;
  popts.rel_tol = cfg.tol;
  switch (cfg.command) {
    case Command::Profile: {
      const auto [lo, hi] = s_range(cfg);
      write_profile_csv(out, sample_profile(params_of(cfg), lo, hi, cfg.samples, popts));
      return;
    }
    case Command::Surface: {
      const auto [lo, hi] = s_range(cfg);
      MeshOptions mopts;
      mopts.angle_range = cfg.angle_range;
      mopts.profile = popts;
      write_obj(out, mesh(params_of(cfg), lo, hi, cfg.samples, cfg.theta_samples, mopts));
      return;
    }
    case Command::Reduce:
      out << reduction_json(reduce(*cfg.family, cfg.B)).dump(2) << "\n";
      return;
    case Command::Roots:
      out << roots_json(*cfg.family).dump(2) << "\n";
      return;
    case Command::WpCheck:
      out << wp_check_json(cfg).dump(2) << "\n";
      return;
    case Command::Chain: {
      const ChainConfig cc = chain_config(reduce(*cfg.family, cfg.B), cfg.H);
      out << probe_json(polynomiality_probe(cc, cfg.order)).dump(2) << "\n";
      return;
    }
    case Command::Verify:
      break;
  }
}

void report_error(std::ostream& err, const Error& e) {
  json j{{"error", to_string(e.kind())}, {"message", e.what()}};
  if (e.estimate()) j["estimate"] = *e.estimate();
  err << j.dump() << "\n";
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

Command parse_command(std::string_view text) {
  for (const auto& [cmd, name] : kCommands)
    if (name == text) return cmd;
  usage("unknown command '" + std::string(text) + "'");
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) usage("--tol must be positive");
  if (cfg.samples < 2) usage("--samples must be at least 2");
  if (cfg.theta_samples < 2) usage("--theta-samples must be at least 2");
  if (!(cfg.angle_range > 0.0)) usage("--angle-range must be positive");
  const std::string_view fmt = natural_format(cfg.command);
  if (!cfg.format.empty() && cfg.format != fmt)
    usage(std::string(to_string(cfg.command)) + " writes " + std::string(fmt) + ", not " + cfg.format);
  if (cfg.command == Command::Verify) return;
  if (!cfg.family) usage(std::string(to_string(cfg.command)) + " needs --family");
  if (cfg.command == Command::Chain && (cfg.order < 3 || cfg.order > kDefaultChainMax))
    usage("--order must lie in [3, 12]");
  const bool uses_range = cfg.command == Command::Profile || cfg.command == Command::Surface;
  if (!uses_range && (cfg.s_min || cfg.s_max))
    usage(std::string(to_string(cfg.command)) + " takes no s-range");
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_profile_csv(std::ostream& out, const std::vector<CurveSample>& samples) {
  out << "s,x,second,dx,dsecond\n";
  for (const auto& c : samples) {
    out << format_number(c.s) << ',' << format_number(c.x) << ',' << format_number(c.second) << ','
        << format_number(c.dx) << ',' << format_number(c.dsecond) << '\n';
  }
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
  out << "# " << to_string(mesh.params.family) << " H=" << format_number(mesh.params.H)
      << " B=" << format_number(mesh.params.B) << " grid " << mesh.n_s << "x" << mesh.n_theta << "\n";
  for (const Vec3& v : mesh.vertices)
    out << "v " << format_number(v[0]) << ' ' << format_number(v[1]) << ' ' << format_number(v[2]) << '\n';
  for (const auto& q : mesh.quads) {
    out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << '\n';
    out << "f " << q[0] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
      file.open(cfg.out, std::ios::binary);
      if (!file) usage("cannot open " + cfg.out + " for writing");
      sink = &file;
    }
    if (cfg.command == Command::Verify) return verify_main(*sink);
    // Build the whole document first so a failure leaves no partial output.
    std::ostringstream buffer;
    emit(buffer, cfg);
    *sink << buffer.str();
    return 0;
  } catch (const Error& e) {
    report_error(err, e);
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant mean curvature surfaces of revolution and their Weierstrass reduction"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string family;

  for (const auto& [cmd, name] : kCommands) {
    CLI::App* sub = app.add_subcommand(std::string(name), std::string(description(cmd)));
    sub->callback([&cfg, c = cmd] { cfg.command = c; });
    if (cmd == Command::Verify) {
      sub->add_option("--out", cfg.out, "Output path (default: stdout)");
      continue;
    }
    sub->add_option("--family", family, "euclidean | spacelike-axis | timelike-axis");
    sub->add_option("--H", cfg.H, "Mean curvature H > 0");
    sub->add_option("--B", cfg.B, "Classifying parameter B >= 0");
    sub->add_option("--s-min", cfg.s_min, "Lower arc length");
    sub->add_option("--s-max", cfg.s_max, "Upper arc length");
    sub->add_option("--samples", cfg.samples, "Samples along s (or along z for wp-check)");
    sub->add_option("--theta-samples", cfg.theta_samples, "Samples along the rotation angle");
    sub->add_option("--angle-range", cfg.angle_range, "Half-width of the hyperbolic angle window");
    sub->add_option("--tol", cfg.tol, "Relative quadrature tolerance");
    sub->add_option("--order", cfg.order, "Derivative-chain order K for chain");
    sub->add_option("--out", cfg.out, "Output path (default: stdout)");
    sub->add_option("--format", cfg.format, "csv | obj | json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  try {
    if (!family.empty()) cfg.family = parse_family(family);
  } catch (const Error& e) {
    report_error(err, e);
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace cmc
