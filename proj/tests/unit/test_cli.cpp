#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/json_io.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tleaf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = tleaf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(TLEAF_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("matrix parsing") {
  auto m = tleaf::cli::parse_matrix("[[[1, 0], [0, 2]], [[0, -1], 3]]");
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == std::complex<double>(0.0, 2.0));
  CHECK(m(1, 1) == std::complex<double>(3.0, 0.0));
  CHECK_THROWS_AS(tleaf::cli::parse_matrix("[[1, 2], [3]]"), tleaf::cli::InputError);
  CHECK_THROWS_AS(tleaf::cli::parse_matrix("[[1, 2]"), tleaf::cli::InputError);
  try {
    tleaf::cli::parse_matrix("[[1, 2], [3, x]]");
  } catch (const tleaf::cli::InputError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  const auto back = tleaf::cli::parse_matrix(tleaf::cli::format_matrix(m));
  CHECK((back - m).norm() == 0.0);
}

TEST_CASE("leaves") {
  auto r = run({"leaves", "--sl", "2", "--class", "regular-ss"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["command"] == "leaves");
  CHECK(j["parameters"]["seed"].is_number());
  CHECK(j["tolerances"]["rank_rel"] == 1e-8);
  CHECK(j["results"]["leaves"].size() == 2);

  r = run({"leaves", "--sl", "3", "--class", "central"});
  CHECK(r.json()["results"]["leaves"].size() == 1);

  r = run({"leaves", "--sl", "4", "--class", "ss:1"});
  j = r.json();
  CHECK(j["results"]["class"]["m_C"]["cycles"] == "(1 4)");
  CHECK(j["results"]["leaves"].size() == 20);

  r = run({"leaves", "--sl", "3", "--theta", "outer"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unsupported: m_C tables out of scope") != std::string::npos);

  r = run({"leaves", "--sl", "3", "--class", "ss:7"});
  CHECK(r.code == 2);
  r = run({"leaves", "--sl", "2", "--class", "regular-ss", "--tsv"});
  CHECK(r.out.rfind("w\tword", 0) == 0);
}

TEST_CASE("rank-at") {
  auto r = run({"rank-at", temp_file("id.json", "[[1,0,0],[0,1,0],[0,0,1]]")});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["results"]["rank"] == 0);
  CHECK(j["results"]["cell"]["cycles"] == "e");
  CHECK(j["results"]["match"] == true);

  // zero locus point for n = 1, l = 1
  r = run({"rank-at", temp_file("zl.json", "[[2.5, 0.5], [-2, 0]]")});
  j = r.json();
  CHECK(j["results"]["rank"] == 0);
  CHECK(j["results"]["cell"]["cycles"] == "(1 2)");

  r = run({"rank-at", temp_file("g.json", "[[2,1,0],[1,1,3],[0,0,1]]")});
  CHECK(r.code == 0);
  CHECK(r.json()["results"]["match"] == true);

  r = run({"rank-at", temp_file("bad.json", "[[1, 2]")});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error at byte") != std::string::npos);
  r = run({"rank-at", temp_file("det.json", "[[2, 0], [0, 2]]")});
  CHECK(r.code == 2);
  r = run({"rank-at", std::string(TLEAF_TEST_TMPDIR) + "/missing.json"});
  CHECK(r.code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "lemmas"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["results"]["failures"] == 0);
  CHECK(j["results"]["max_residual"] == 0.0);

  r = run({"verify", "rank-formula", "--sl", "2", "--samples", "20"});
  CHECK(r.code == 0);
  j = r.json();
  CHECK(j["summary"]["passed_checks"] == j["summary"]["checks"]);

  r = run({"verify", "double-iso", "--samples", "20"});
  CHECK(r.code == 0);
  CHECK(r.json()["results"]["max_residual"].get<double>() < 1e-8);

  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "lemmas", "--samples", "-3"}).code == 2);
}

TEST_CASE("determinism") {
  const auto a = run({"verify", "tangency", "--sl", "3", "--seed", "5"});
  const auto b = run({"verify", "tangency", "--sl", "3", "--seed", "5"});
  CHECK(a.out == b.out);
  const auto c = run({"double", "--samples", "3", "--seed", "9"});
  const auto d = run({"double", "--samples", "3", "--seed", "9"});
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("weyl") {
  auto r = run({"weyl", "--type", "D4", "--theta", "triality"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["results"]["order"] == 192);
  CHECK(j["results"]["rank_one_minus_theta_squared"] == 2);
  r = run({"weyl", "--sl", "3", "--theta", "flip"});
  j = r.json();
  CHECK(j["results"]["order"] == 6);
  CHECK(run({"weyl", "--type", "D4", "--theta", "flip"}).code == 2);
  CHECK(run({"weyl", "--type", "B"}).code == 2);
}

TEST_CASE("help and usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}
