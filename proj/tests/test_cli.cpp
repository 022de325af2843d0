#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "choquet/cli.hpp"
#include "choquet/errors.hpp"
#include "choquet/monte_carlo.hpp"
#include "json.hpp"

using namespace choquet;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

const std::string kData = CHOQUET_DATA_DIR;
const std::string kExample = kData + "/reference3.json";

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "choquet-dist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("choquet_cli_" + name);
  std::ofstream(p) << contents;
  return p;
}

std::vector<std::vector<double>> read_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

// Significant digits in a printed number, ignoring sign, exponent and leading zeros.
int significant_digits(const std::string& s) {
  std::string mantissa = s.substr(0, s.find_first_of("eE"));
  int count = 0;
  bool leading = true;
  for (char c : mantissa) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("moments on the reference capacity") {
  const auto r = run({"moments", "--law", "uniform", "--capacity", kExample});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["mean"].get<double>() == doctest::Approx(0.495).epsilon(0.002));
  CHECK(doc["sd"].get<double>() == doctest::Approx(0.183).epsilon(0.005));
  CHECK(doc["exact"].get<bool>());
  const auto e = json::parse(run({"moments", "--law", "exponential", "--capacity", kExample}).out);
  CHECK(e["mean"].get<double>() == doctest::Approx(29.0 / 30.0));
  const auto n = run({"moments", "--law", "normal", "--capacity", kExample, "--dj-order", "3"});
  REQUIRE(n.code == kExitOk);
  CHECK(json::parse(n.out)["dj_order"] == 3);
}

TEST_CASE("validate") {
  SUBCASE("capacity") {
    const auto r = run({"validate", "--capacity", kExample});
    CHECK(r.code == kExitOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["is_capacity"].get<bool>());
    CHECK(doc["violating_pair"].is_null());
    CHECK(doc["orness"].get<double>() == doctest::Approx(0.491666666667));
  }
  SUBCASE("non-monotone") {
    const auto p = temp_file(
        "nonmono.json",
        R"({"n":2,"values":{"1":0.7,"2":0.2,"1,2":0.5}})");
    const auto r = run({"validate", "--capacity", p.string()});
    CHECK(r.code == kExitInvalid);
    const auto doc = json::parse(r.out);
    CHECK_FALSE(doc["is_monotone"].get<bool>());
    CHECK(doc["violating_pair"] == json::array({"1", "1,2"}));
    CHECK(r.err.find("not monotone") != std::string::npos);
    fs::remove(p);
  }
  SUBCASE("schema violations") {
    const auto p = temp_file("bad.json", R"({"n":2,"values":{"1":0.7,"3":0.2}})");
    const auto r = run({"validate", "--capacity", p.string()});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.rfind("invalid input:", 0) == 0);
    fs::remove(p);
    CHECK(run({"validate", "--capacity", "/nonexistent/file.json"}).code == kExitInvalid);
  }
}

TEST_CASE("pdf and cdf grids") {
  const auto r = run({"pdf", "--law", "uniform", "--capacity", kExample, "--grid", "0:1:200"});
  REQUIRE(r.code == kExitOk);
  std::string header;
  const auto rows = read_csv(r.out, &header);
  CHECK(header == "y,pdf,cdf");
  REQUIRE(rows.size() == 200);
  CHECK(rows.front()[0] == 0.0);
  CHECK(rows.back()[0] == 1.0);
  CHECK(rows.back()[2] == doctest::Approx(1.0));
  double trap = 0.0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k][2] >= rows[k - 1][2]);
    trap += 0.5 * (rows[k][0] - rows[k - 1][0]) * (rows[k][1] + rows[k - 1][1]);
  }
  CHECK(trap == doctest::Approx(1.0).epsilon(0.01));

  const auto c = run({"cdf", "--law", "exponential", "--capacity", kExample, "--grid", "0:5:11"});
  REQUIRE(c.code == kExitOk);
  const auto crow = read_csv(c.out, &header);
  CHECK(header == "y,cdf");
  CHECK(crow.size() == 11);

  // normal has no exact density
  CHECK(run({"pdf", "--law", "normal", "--capacity", kExample, "--grid", "0:1:5"}).code ==
        kExitInvalid);
  CHECK(run({"pdf", "--law", "uniform", "--capacity", kExample, "--grid", "0:1:1"}).code ==
        kExitInvalid);
  CHECK(run({"pdf", "--law", "uniform", "--capacity", kExample, "--grid", "1:0:5"}).code ==
        kExitInvalid);
  CHECK(run({"pdf", "--law", "cauchy", "--capacity", kExample, "--grid", "0:1:5"}).code ==
        kExitInvalid);
}

TEST_CASE("numbers carry 12 significant digits") {
  const auto r = run({"pdf", "--law", "uniform", "--capacity", kExample, "--grid", "0.1:0.9:7"});
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) CHECK(significant_digits(cell) <= 12);
  }
  const auto doc = json::parse(run({"moments", "--law", "uniform", "--capacity", kExample}).out);
  std::ostringstream s;
  s.precision(17);
  s << doc["mean"].get<double>();
  CHECK(significant_digits(s.str()) <= 12);
}

TEST_CASE("exponential regularity violation") {
  const auto p = temp_file("irregular.json",
                           R"({"n":2,"values":{"1":0.0,"2":0.0,"1,2":1.0}})");
  const auto r = run({"pdf", "--law", "exponential", "--capacity", p.string(), "--grid", "0:1:3"});
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.rfind("regularity violation:", 0) == 0);
  fs::remove(p);
}

TEST_CASE("attribute limit and CHOQUET_NMAX") {
  // n = 11 symmetric capacity |S| / 11
  json values = json::object();
  for (unsigned m = 1; m < (1u << 11); ++m) {
    std::string key;
    for (unsigned i = 0; i < 11; ++i) {
      if (m & (1u << i)) key += (key.empty() ? "" : ",") + std::to_string(i + 1);
    }
    values[key] = std::popcount(m) / 11.0;
  }
  const auto p = temp_file("n11.json", json{{"n", 11}, {"values", values}}.dump());
  ::unsetenv("CHOQUET_NMAX");
  const auto r = run({"validate", "--capacity", p.string()});
  CHECK(r.code == kExitInvalid);
  CHECK(r.err.rfind("limit exceeded:", 0) == 0);
  ::setenv("CHOQUET_NMAX", "11", 1);
  CHECK(run({"validate", "--capacity", p.string()}).code == kExitOk);
  ::setenv("CHOQUET_NMAX", "zero", 1);
  CHECK(run({"validate", "--capacity", p.string()}).code == kExitInvalid);
  ::unsetenv("CHOQUET_NMAX");
  fs::remove(p);
}

TEST_CASE("stigler and mixture") {
  const auto r = run({"stigler", "--a", "2", "--n", "20"});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["alpha"].get<double>() == doctest::Approx(0.25));
  CHECK(doc["beta2"].get<double>() == doctest::Approx(1.0 / 112));
  CHECK(doc.contains("component_mean"));
  CHECK(doc.contains("n_times_variance"));
  const auto m = run({"mixture", "--law", "normal", "--capacity", kExample, "--grid", "-3:3:61"});
  REQUIRE(m.code == kExitOk);
  std::string header;
  CHECK(read_csv(m.out, &header).size() == 61);
  CHECK(header == "y,mixture_pdf");
}

TEST_CASE("parse_grid") {
  const auto g = parse_grid("-1:1:5");
  CHECK(g == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK_THROWS_AS(parse_grid("0:1"), ValidationError);
  CHECK_THROWS_AS(parse_grid("0:1:2:3"), ValidationError);
  CHECK_THROWS_AS(parse_grid("0:x:3"), ValidationError);
  CHECK_THROWS_AS(parse_grid("0:1:-3"), ValidationError);
}

TEST_CASE("binary: sample output round-trips against the cdf command") {
  const std::string exe = CHOQUET_DIST_EXE;
  const fs::path dir = fs::temp_directory_path() / "choquet_cli_roundtrip";
  fs::create_directories(dir);
  for (const std::string law : {"uniform", "exponential"}) {
    const fs::path samples = dir / (law + "_samples.csv");
    const fs::path curve = dir / (law + "_cdf.csv");
    const std::string hi = law == "uniform" ? "1" : "12";
    const std::string sample_cmd = "'" + exe + "' sample --law " + law + " --capacity '" +
                                   kExample + "' --n 100000 --seed 7 --out '" +
                                   samples.string() + "' > /dev/null";
    const std::string cdf_cmd = "'" + exe + "' cdf --law " + law + " --capacity '" + kExample +
                                "' --grid 0:" + hi + ":20001 --out '" + curve.string() + "'";
    REQUIRE(WEXITSTATUS(std::system(sample_cmd.c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(cdf_cmd.c_str())) == 0);

    std::ifstream sf(samples), cf(curve);
    std::stringstream sbuf, cbuf;
    sbuf << sf.rdbuf();
    cbuf << cf.rdbuf();
    std::vector<double> ys;
    for (const auto& row : read_csv(sbuf.str(), nullptr)) ys.push_back(row[0]);
    std::sort(ys.begin(), ys.end());
    const auto grid = read_csv(cbuf.str(), nullptr);
    // Linear interpolation in the tabulated cdf.
    auto F = [&](double y) {
      if (y <= grid.front()[0]) return grid.front()[1];
      if (y >= grid.back()[0]) return grid.back()[1];
      const double h = grid[1][0] - grid[0][0];
      const auto k = static_cast<std::size_t>((y - grid.front()[0]) / h);
      const auto& a = grid[std::min(k, grid.size() - 2)];
      const auto& b = grid[std::min(k, grid.size() - 2) + 1];
      return a[1] + (b[1] - a[1]) * (y - a[0]) / (b[0] - a[0]);
    };
    CAPTURE(law);
    CHECK(ks_statistic(ys, F) < ks_band(ys.size()));
  }
  fs::remove_all(dir);
}

TEST_CASE("binary: exit codes") {
  const std::string exe = CHOQUET_DIST_EXE;
  auto status = [&](const std::string& args) {
    return WEXITSTATUS(std::system(("'" + exe + "' " + args + " > /dev/null 2>&1").c_str()));
  };
  CHECK(status("moments --law uniform --capacity '" + kExample + "'") == 0);
  CHECK(status("moments --capacity '" + kExample + "'") == 2);
  CHECK(status("frobnicate") == 2);
}
