#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("almost2d_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "almost2d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return a2d::cli::dispatch(int(argv.size()), argv.data());
}

std::string slurp(const std::string& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  REQUIRE(it != header.end());
  return std::size_t(it - header.begin());
}

}  // namespace

TEST_CASE("constants") {
  REQUIRE(cli({"constants", "--output", path("c.json")}) == 0);
  const json j = json::parse(slurp(path("c.json")));
  CHECK(j.at("r1").get<double>() == doctest::Approx(1.9238247).epsilon(1e-7));
  CHECK(j.at("r2").get<double>() == doctest::Approx(30.586196).epsilon(1e-7));
  REQUIRE(cli({"constants", "--format", "csv", "--output", path("c.csv")}) == 0);
  CHECK(read_csv(path("c.csv")).front().front() == "c1");
}

TEST_CASE("construct, norms and check") {
  REQUIRE(cli({"construct", "un", "--n", "3", "--output", path("u3.field")}) == 0);
  const json side = json::parse(slurp(path("u3.field.json")));
  CHECK(side.at("closed_form").at("u_hhalf_sq").get<double>() == 11.0);

  REQUIRE(cli({"norms", path("u3.field"), "--output", path("u3.json")}) == 0);
  const json n = json::parse(slurp(path("u3.json")));
  CHECK(n.at("omega_h_hminushalf").get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(n.at("u_hhalf_sq").get<double>() == doctest::Approx(11.0).epsilon(1e-10));
  CHECK(n.at("max_divergence").get<double>() < 1e-12);

  REQUIRE(cli({"construct", "taylor-green", "--output", path("tg.field")}) == 0);
  const json tg = json::parse(slurp(path("tg.field.json")));
  for (const char* key : {"K", "E"})
    CHECK(tg.at("computed").at(key).get<double>() ==
          doctest::Approx(tg.at("closed_form").at(key).get<double>()).epsilon(1e-12));

  REQUIRE(cli({"check", path("tg.field"), "--nu", "0.1", "--output", path("tg_check.json")}) == 0);
  const json reps = json::parse(slurp(path("tg_check.json")));
  REQUIRE(reps.size() == 3);
  std::vector<std::string> names;
  for (const auto& r : reps) {
    names.push_back(r.at("name").get<std::string>());
    CHECK(r.at("satisfied").get<bool>());
  }
  CHECK(names == std::vector<std::string>{"small_data", "gamma2d", "gamma2d_lp"});
}

TEST_CASE("random construction is reproducible") {
  for (const char* name : {"a", "b"})
    REQUIRE(cli({"construct", "random", "--seed", "17", "--kmax", "3", "--output", path(std::string(name) + ".field")}) == 0);
  CHECK(slurp(path("a.field")) == slurp(path("b.field")));
  REQUIRE(cli({"construct", "random", "--seed", "18", "--kmax", "3", "--output", path("c.field")}) == 0);
  CHECK(slurp(path("a.field")) != slurp(path("c.field")));
}

TEST_CASE("simulate writes identical CSV for identical input") {
  {
    std::ofstream cfg(path("run.cfg"));
    cfg << "nu=0.1\ndt=1e-3\nt_end=0.005\n";
  }
  REQUIRE(cli({"construct", "random", "--seed", "5", "--kmax", "2", "--output", path("r.field")}) == 0);
  for (const char* name : {"s1.csv", "s2.csv"}) REQUIRE(cli({"simulate", path("run.cfg"), path("r.field"), "--output", path(name)}) == 0);
  CHECK(slurp(path("s1.csv")) == slurp(path("s2.csv")));
  const auto rows = read_csv(path("s1.csv"));
  REQUIRE(rows.size() == 7);
  CHECK(rows.front().size() == 13);
  CHECK(rows.front().front() == "t");
  CHECK(json::parse(slurp(path("s1.csv.json"))).contains("status"));
}

TEST_CASE("annulus sweep") {
  REQUIRE(cli({"sweep", "annulus-analog", "--n", "3,6,12", "--nu", "1", "--output", path("sweep.csv")}) == 0);
  const auto rows = read_csv(path("sweep.csv"));
  REQUIRE(rows.size() == 4);
  const std::size_t q = column(rows[0], "criterion_quantity");
  CHECK(std::stod(rows[2][q]) < std::stod(rows[1][q]));
  CHECK(std::stod(rows[3][q]) < std::stod(rows[2][q]));
}

TEST_CASE("wholespace tables") {
  REQUIRE(cli({"wholespace", "lambda", "--n", "3,10,100", "--output", path("lambda.csv")}) == 0);
  const auto rows = read_csv(path("lambda.csv"));
  REQUIRE(rows.size() == 4);
  const std::size_t v = column(rows[0], "volume");
  CHECK(std::stod(rows[1][v]) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-10));
  REQUIRE(cli({"wholespace", "embedding", "--p", "inf", "--format", "json", "--output", path("emb.json")}) == 0);
  CHECK(json::parse(slurp(path("emb.json"))).is_array());
}

TEST_CASE("exit codes") {
  CHECK(cli({}) == 1);
  CHECK(cli({"constants", "--bogus"}) == 1);
  CHECK(cli({"frobnicate"}) == 1);
  CHECK(cli({"check", path("tg.field")}) == 1);
  CHECK(cli({"norms", path("missing.field")}) == 2);
  CHECK(cli({"constants", "--output", path("no/such/dir/c.json")}) == 2);
  CHECK(cli({"construct", "un", "--n", "40", "--grid", "16", "--output", path("bad.field")}) == 1);
}
