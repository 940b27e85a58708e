#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cliffgen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("verify: even m is a usage error") {
  const auto r = run({"verify", "thm1", "--m", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("m must be odd") != std::string::npos);
}

TEST_CASE("verify: json lines") {
  const auto r = run({"verify", "coeffs"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("identity_id"));
    CHECK(j["passed"].get<bool>());
    ++n;
  }
  CHECK(n > 0);
}

TEST_CASE("usage errors") {
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "ft", "--h", "exp(z^"}).code == 2);
  CHECK(run({"eval", "hermite-closed", "--grid", "x0=0:1:2,r=0:1:2"}).code == 2);
  CHECK(run({"eval", "hermite-closed", "--grid", "x0=0:1:2"}).code == 2);
  CHECK(run({"eval", "gegenbauer-closed", "--alpha", "0.5", "--at", "0.1,1.5"}).code != 0);
}

TEST_CASE("eval: grid rows and formats agree") {
  const auto csv = run({"eval", "hermite-closed", "--m", "3", "--grid", "x0=-1:1:5,r=0.2:1:5"});
  REQUIRE(csv.code == 0);
  const auto lines = data_lines(csv.out);
  REQUIRE(lines.size() == 26);
  CHECK(lines[0].rfind("x0,r,A,B", 0) == 0);

  const auto js = run({"eval", "hermite-closed", "--m", "3", "--grid", "x0=-1:1:5,r=0.2:1:5", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc["rows"].size() == 25);
  std::istringstream row(lines[7]);
  std::string cell;
  for (const auto& col : doc["columns"]) {
    std::getline(row, cell, ',');
    CHECK(std::stod(cell) == doctest::Approx(doc["rows"][6][col.get<std::string>()].get<double>()).epsilon(1e-15));
  }
}

TEST_CASE("eval: closed form and series agree at a point") {
  const auto a = run({"eval", "hermite-closed", "--m", "5", "--k", "1", "--at", "0.3,0.7", "--format", "json"});
  const auto b = run({"eval", "hermite-series", "--m", "5", "--k", "1", "--at", "0.3,0.7", "--format", "json"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const auto ra = nlohmann::json::parse(a.out)["rows"][0], rb = nlohmann::json::parse(b.out)["rows"][0];
  for (const char* c : {"A", "B"}) CHECK(ra[c].get<double>() == doctest::Approx(rb[c].get<double>()).epsilon(1e-12));
}

TEST_CASE("eval: fueter transform of a parsed h") {
  const auto r = run({"eval", "ft", "--h", "exp(z^2)", "--m", "3", "--at", "0,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto row = nlohmann::json::parse(r.out)["rows"][0];
  CHECK(row["A"].get<double>() == doctest::Approx(-4 / std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("corollaries") {
  CHECK(run({"corollaries", "--section", "3"}).code == 0);
  CHECK(run({"corollaries", "--section", "4"}).code == 0);
  CHECK(run({"corollaries", "--section", "5"}).code == 2);
}

TEST_CASE("bench") {
  const auto empty = run({"bench", "--grid", "x0=0:1:0,r=0.1:1:0"});
  CHECK(empty.code == 0);
  CHECK(data_lines(empty.out).size() == 1);
  const auto small = run({"bench", "--points", "64", "--reps", "1"});
  CHECK(small.code == 0);
  CHECK(data_lines(small.out).size() == 2);
}
