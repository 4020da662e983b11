#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wildsets/cli.hpp"

using namespace wildsets;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wildsets_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("hilbert and reciprocity") {
  auto r = run({"hilbert", "--q", "5", "--a", "t", "--b", "2", "--place", "t"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "-1\n");
  r = run({"hilbert", "--q", "5", "--a", "t", "--b", "4", "--place", "t"});
  CHECK(r.out == "1\n");
  r = run({"reciprocity", "--q", "9", "--a", "a*t^2 + t + 1", "--b", "(t - a)/(t^3 + 2)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("product 1\n") != std::string::npos);
  r = run({"--json", "hilbert", "--q", "5", "--curve", "t^3 - t", "--a", "y", "--b", "t - 2", "--place", "t"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"symbol\"") != std::string::npos);
}

TEST_CASE("ranks") {
  auto r = run({"ranks", "--q", "5", "--places", "t^2+2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("rk Sing 2\nrk Delta 1\nrk G 0\nrk PicY 1\n") == 0);
}

TEST_CASE("smile") {
  auto r = run({"smile", "--q", "5", "--curve", "t^3 - t", "--p1", "t^2+2", "--p2", "t^2+3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "true\n");
  r = run({"smile", "--q", "5", "--curve", "t^3 - t", "--p1", "(t; ramified)", "--p2", "t^2+3"});
  CHECK(r.code == kExitRefusal);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitParse);
  CHECK(run({"bogus"}).code == kExitParse);
  CHECK(run({"hilbert", "--q", "4", "--a", "t", "--b", "2", "--place", "t"}).code == kExitParse);
  CHECK(run({"hilbert", "--q", "5", "--a", "t+", "--b", "2", "--place", "t"}).code == kExitParse);
  CHECK(run({"hilbert", "--q", "5", "--a", "t", "--b", "2", "--place", "t^2+1"}).code == kExitParse);
  CHECK(run({"construct", "--q", "5", "--rank", "1", "--places", "t"}).code == kExitRefusal);
  CHECK(run({"construct", "--q", "3", "--rank", "1", "--places", "t, t-1"}).code == kExitRefusal);
  CHECK(run({"verify", "--cert", temp_path("missing.json")}).code == kExitParse);
}

TEST_CASE("search exhaustion") {
  // The triple over F_5 needs an auxiliary 2-divisible place of degree 2.
  auto r = run({"--degree-cap", "1", "construct", "--q", "5", "--rank", "1", "--places", "t, t-1, t-2"});
  unsetenv("WILDSETS_DEGREE_CAP");
  CHECK(r.code == kExitSearchExhausted);
}

TEST_CASE("construct, verify and wild") {
  const auto path = temp_path("pair.json");
  auto r = run({"construct", "--q", "5", "--rank", "1", "--places", "t,t-1", "--out", path});
  REQUIRE(r.code == kExitOk);
  r = run({"verify", "--cert", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("wild set: {t, t + 4}") != std::string::npos);
  r = run({"wild", "--cert", path});
  CHECK(r.out == "{t, t + 4}\n");

  // Corrupting one local map breaks the compatibility check.
  std::string text = slurp(path);
  const auto at = text.find("\"image_of_u\": \"pi\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 18, "\"image_of_u\": \"u\"");
  const auto bad = temp_path("pair_bad.json");
  std::ofstream(bad) << text;
  r = run({"verify", "--cert", bad});
  CHECK(r.code == kExitVerifyFailed);
  CHECK(run({"wild", "--cert", bad}).code == kExitVerifyFailed);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("fresh-process round trip and byte-identical output") {
  const std::string bin = WILDSETS_CLI_PATH;
  const auto a = temp_path("general_a.json"), b = temp_path("general_b.json");
  const std::string cmd = bin + " construct --q 5 --curve 't^3 - t' --rank general --P 't, t-1' --Q 't^2+2, t^2+3' --out ";
  REQUIRE(std::system((cmd + a + " > /dev/null").c_str()) == 0);
  REQUIRE(std::system((cmd + b + " > /dev/null").c_str()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(std::system((bin + " verify --cert " + a + " > /dev/null").c_str()) == 0);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("selftest") {
  auto r = run({"--seed", "3", "selftest", "--samples", "40"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
