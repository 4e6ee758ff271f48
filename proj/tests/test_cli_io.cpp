#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmc/cli_io.hpp"
#include "cmc/elliptic_reduction.hpp"
#include "cmc/errors.hpp"
#include "oracles.hpp"

using namespace cmc;
using nlohmann::json;

namespace {

struct Output {
  int code;
  std::string out, err;
};

Output cli(std::vector<const char*> args) {
  args.insert(args.begin(), "cmc");
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("profile csv") {
  const Output o = cli({"profile", "--family", "euclidean", "--H", "1", "--B", "0", "--samples", "11"});
  REQUIRE(o.code == 0);
  CHECK(o.out.rfind("s,x,second,dx,dsecond\n", 0) == 0);
  const auto rows = csv_rows(o.out);
  REQUIRE(rows.size() == 11);
  for (const auto& r : rows) {
    REQUIRE(r.size() == 5);
    CHECK(r[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r[1] == doctest::Approx(r[0]).epsilon(1e-10));
  }
}

TEST_CASE("surface obj") {
  const Output o = cli({"surface", "--family", "spacelike-axis", "--H", "0.5", "--B", "0", "--samples", "7",
                        "--theta-samples", "5"});
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  std::string line;
  std::size_t nv = 0, nf = 0;
  double worst = 0.0;
  while (std::getline(in, line)) {
    std::istringstream rec(line);
    std::string tag;
    rec >> tag;
    if (tag == "v") {
      double x, y, z;
      rec >> x >> y >> z;
      worst = std::max(worst, std::abs(z * z - y * y - 1.0));
      ++nv;
    } else if (tag == "f") {
      std::size_t a, b, c;
      rec >> a >> b >> c;
      CHECK(a >= 1);
      CHECK(c <= 35);
      ++nf;
    }
  }
  CHECK(nv == 35);
  CHECK(nf == 2 * 6 * 4);
  CHECK(worst < 1e-12);
}

TEST_CASE("reduce json") {
  const Output o = cli({"reduce", "--family", "timelike-axis", "--B", "2"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  const ReductionData d = reduce(Family::LorentzTimelikeAxis, 2.0);
  CHECK(j.at("g2").get<double>() == d.g2);
  CHECK(j.at("g3").get<double>() == d.g3);
  CHECK(j.at("lambda").get<double>() == d.lambda);
  CHECK(j.at("disc").get<double>() == d.disc);
  CHECK(j.at("singular").get<bool>() == false);
}

TEST_CASE("roots json lists the computed roots") {
  for (const char* fam : {"timelike-axis", "spacelike-axis", "euclidean"}) {
    const Output o = cli({"roots", "--family", fam});
    REQUIRE(o.code == 0);
    const json j = json::parse(o.out);
    const auto want = singular_B(parse_family(fam));
    REQUIRE(j.at("roots").size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(j["roots"][i]["B"].get<double>() == want[i]);
    CHECK(j.at("positive_root_count").get<std::size_t>() == want.size());
  }
}

TEST_CASE("wp-check and chain json") {
  const Output w = cli({"wp-check", "--family", "timelike-axis", "--B", "2", "--samples", "20"});
  REQUIRE(w.code == 0);
  const json jw = json::parse(w.out);
  CHECK(jw.at("ode_residual").get<double>() < 1e-9);
  CHECK(jw.at("inverse_roundtrip").get<double>() < 1e-8);

  const Output c = cli({"chain", "--family", "timelike-axis", "--H", "0.5", "--B", "2", "--order", "5"});
  REQUIRE(c.code == 0);
  const json jc = json::parse(c.out);
  REQUIRE(jc.at("terms").size() == 5);
  CHECK(jc["terms"][0]["parity"] == "odd");
  CHECK(jc["terms"][1]["parity"] == "even");
}

TEST_CASE("output is deterministic") {
  const std::vector<const char*> args{"surface", "--family", "euclidean", "--B", "0.5", "--samples", "9"};
  const Output a = cli(args), b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({"profile"}).code == 2);
  CHECK(cli({"profile", "--family", "euclidean", "--samples", "1"}).code == 2);
  CHECK(cli({"profile", "--family", "euclidean", "--format", "obj"}).code == 2);
  CHECK(cli({"profile", "--family", "hyperbolic"}).code == 2);
  CHECK(cli({"chain", "--family", "euclidean", "--B", "0.5", "--order", "13"}).code == 2);
  CHECK(cli({"reduce", "--family", "euclidean", "--s-min", "0"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  const Output o = cli({"profile"});
  CHECK(json::parse(o.err).at("error") == std::string(to_string(ErrorKind::Usage)));
}

TEST_CASE("library errors exit 1") {
  const Output o = cli({"profile", "--family", "timelike-axis", "--B", "0"});
  CHECK(o.code == 1);
  CHECK(o.out.empty());
  const json j = json::parse(o.err);
  CHECK(j.at("error") == std::string(to_string(ErrorKind::EmptyDomain)));
  CHECK(cli({"chain", "--family", "euclidean", "--B", "1"}).code == 1);
}

TEST_CASE("format_number round-trips") {
  for (int i = 0; i < 500; ++i) {
    const double v = oracle::uniform(-1.0, 1.0) * std::pow(10.0, oracle::uniform(-30, 30));
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-2.0) == "-2");
}
