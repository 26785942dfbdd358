#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

const fs::path& dir() {
  static const fs::path d = [] {
    const fs::path p = fs::temp_directory_path() / ("nucleon_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Run run(const std::string& args) {
  const fs::path out = dir() / "stdout", err = dir() / "stderr";
  const std::string cmd = std::string("'") + NUCLEON_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" +
                          err.string() + "'";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string& name, const std::string& content) {
  const fs::path p = dir() / name;
  std::ofstream(p) << content;
  return p;
}

const char* kUnitBox = R"({"grid": {"axes": [{"cells": [1, 1]}, {"cells": [1, 1]}]},
  "boxes": [{"intervals": [[0, 1], [1, 2]], "coeff": 1}]})";

const char* kPartition = R"({"grid": {"axes": [{"cells": [1, 2, 1, 1]}, {"cells": [1, 1, 3]}]},
  "intervals": [[[0, 2], [2, 4]], [[0, 1], [1, 3]]]})";

} // namespace

TEST_CASE("norm of the unit box") {
  const fs::path in = write("box.json", kUnitBox);
  const Run r = run("norm --input '" + in.string() + "' --exponents 1,2");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["norm"].get<double>() == 1.0);
  CHECK(r.out.find("\"norm\": 1.0") != std::string::npos);
}

TEST_CASE("oscillator trace") {
  const Run r = run("hosc-trace --F exp:1 --d 1 --K 40");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(1.0 / (2.0 * std::sinh(1.0))).epsilon(1e-14));
  CHECK(j["tail_bound"].get<double>() < 1e-30);
}

TEST_CASE("approx output depends only on the seed") {
  const fs::path part = write("part.json", kPartition);
  const std::string args = "approx --partition '" + part.string() + "' --exponents 1,2 --trials 200 --seed 7";
  const Run a = run(args), b = run(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const Run c = run("approx --partition '" + part.string() + "' --exponents 1,2 --trials 200 --seed 8");
  CHECK(c.out != a.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.dump().find("max_ratio") != std::string::npos);
}

TEST_CASE("validation failures exit with status 2") {
  const fs::path box = write("box.json", kUnitBox);
  const Run bad_p = run("norm --input '" + box.string() + "' --exponents 0.5,2");
  CHECK(bad_p.status == 2);
  CHECK(bad_p.err.rfind("nucleon: error reason=", 0) == 0);
  const fs::path broken = write("broken.json", "{\"grid\": ");
  const Run bad_json = run("norm --input '" + broken.string() + "' --exponents 1,2");
  CHECK(bad_json.status == 2);
  CHECK(bad_json.err.find("reason=malformed_json") != std::string::npos);
  const Run unknown = run("frobnicate");
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("reason=unknown_subcommand") != std::string::npos);
  const Run missing = run("approx --exponents 1,2");
  CHECK(missing.status == 2);
  CHECK(missing.err.find("reason=usage") != std::string::npos);
}

TEST_CASE("numerical guards exit with status 3") {
  std::string values = "[";
  for (int i = 0; i < 201; ++i) values += (i ? "," : "") + std::to_string(std::exp(-0.5 * (0.2 * i - 20) * (0.2 * i - 20)));
  values += "]";
  const fs::path f = write("coarse.json", R"({"grid": {"axes": [{"uniform": [-20, 20, 201]}]}, "values": )" + values + "}");
  const Run r = run("stft --input '" + f.string() + "' --x -5:5:11 --xi -20:20:11");
  CHECK(r.status == 3);
  CHECK(r.err.rfind("nucleon: numerical reason=aliasing", 0) == 0);
}

TEST_CASE("CSV output and atomic files") {
  const fs::path target = dir() / "eq.csv";
  const Run r = run("equivalence --dilations 1,2 --x -20:20:81 --xi -12:12:49 --K 12 --L 12 --format csv -o '" +
                    target.string() + "'");
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  const std::string csv = slurp(target);
  CHECK(csv.rfind("t,ratio\r\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  for (const auto& e : fs::directory_iterator(dir())) {
    CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
  }
}

TEST_CASE("cleanup") { fs::remove_all(dir()); }
