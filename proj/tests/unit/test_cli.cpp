#include <doctest.h>

#include "weilcodes/cli.hpp"
#include "weilcodes/errors.hpp"
#include "weilcodes/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace weilcodes;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("verify the [20,4,12] code") {
  const auto r = run({"verify", "--p", "3", "--m1", "2", "--m2", "2", "--u", "1", "--lambda", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[20,4,12]"));
  CHECK(contains(r.out, "1 + 60z^12 + 20z^18"));
  CHECK(contains(r.out, "theorem 3"));
}

TEST_CASE("verify as JSON") {
  const auto r = run({"--format", "json", "verify", "--p", "3", "--m1", "2", "--m2", "2", "--u", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 20);
  CHECK(j["dimension"] == 4);
  CHECK(j["we"] == nlohmann::json::parse("[[0,1],[12,60],[18,20]]"));
  CHECK(j["cwe"][0] == nlohmann::json::parse("[[2,9,9],20]"));
  CHECK(j["predicted"]["theorem"] == 3);
  CHECK(j["match"]["all"] == true);
  CHECK(j["griesmer"]["classification"] == "optimal");
  CHECK(j["spec"]["lambda"] == 0);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "predict", "--p", "5", "--m1", "1", "--m2", "2", "--u", "1",
                                 "--lambda", "-1"},
        std::vector<std::string>{"--format", "json", "griesmer", "--p", "3", "--n", "112", "--k", "6", "--d", "72"},
        std::vector<std::string>{"--format", "json", "tables", "--which", "12p"},
        std::vector<std::string>{"--format", "json", "enumerate", "--p", "3", "--m1", "1", "--m2", "2", "--u",
                                 "1", "--punctured"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
    CHECK_FALSE(contains(r.out, "."));
  }
}

TEST_CASE("tables") {
  const auto r = run({"tables", "--which", "13"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[648,7,378]"));
  CHECK(contains(r.out, "1 + 72z^378 + 2034z^432 + 80z^486"));
  const auto p = run({"tables", "--which", "12p"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "published claim optimal for [112,6,72]"));
}

TEST_CASE("griesmer") {
  const auto r = run({"griesmer", "--p", "3", "--n", "10", "--k", "4", "--d", "6"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, ": optimal"));
  CHECK(contains(run({"griesmer", "--p", "3", "--n", "30", "--k", "4", "--d", "18"}).out, "almost-optimal"));
}

TEST_CASE("construct and predict") {
  const auto c = run({"construct", "--p", "3", "--m1", "2", "--m2", "2", "--u", "1"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "length 20"));
  const auto d = run({"construct", "--p", "3", "--m1", "1", "--m2", "1", "--u", "1", "--lambda", "1", "--codewords"});
  CHECK(d.code == 0);
  CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 9);
  const auto m = run({"construct", "--p", "3", "--m1", "2", "--m2", "2", "--u", "1", "--modulus1", "2,1,1"});
  CHECK(m.code == 0);
  CHECK(contains(m.out, "length 20"));
  const auto v = run({"verify", "--p", "3", "--m1", "2", "--m2", "2", "--u", "1", "--modulus1", "2,1,1",
                      "--modulus2", "2,2,1"});
  CHECK(v.code == 0);
  const auto p = run({"predict", "--p", "3", "--m1", "2", "--m2", "4", "--u", "2", "--lambda", "1", "--punctured"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "[126,6,81]"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "--p"}).code == 2);
  CHECK(run({"verify", "--p", "3"}).code == 2);
  CHECK(run({"verify", "--p", "9", "--m1", "1", "--m2", "1", "--u", "1"}).code == 2);
  CHECK(run({"--format", "xml", "griesmer", "--p", "3", "--n", "1", "--k", "1", "--d", "1"}).code == 2);
  CHECK(run({"tables", "--which", "14"}).code == 2);
  CHECK(run({"construct", "--p", "3", "--m1", "2", "--m2", "2", "--u", "1", "--modulus1", "2,0,1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(contains(run({"--help"}).out, "verify"));
  const auto b = run({"--budget", "100", "verify", "--p", "3", "--m1", "2", "--m2", "4", "--u", "1"});
  CHECK(b.code == 3);
  CHECK(contains(b.err, "729"));
}

TEST_CASE("sweeps") {
  const auto r = run({"verify", "--sweep", "p=3;m1=1-2;m2=1-2;u=1;lambda=all;punctured=both"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "24 specs, 0 mismatched"));
  CHECK(run({"verify", "--sweep", "p=3;q=1"}).code == 2);
  CHECK(parse_sweep("acceptance").size() == 546);
  CHECK(parse_sweep("p=5;m1=1;m2=1-2;u=2;lambda=-1").size() == 2);
  CHECK(parse_sweep("p=5;m1=1;m2=1-2;u=2;lambda=-1")[0].lambda == 4);
  CHECK(parse_sweep("p=3;m1=1-3;m2=1-3;max_order=81").size() == 6);
  CHECK_THROWS_AS(parse_sweep("p=3;p=5"), Error);
  CHECK_THROWS_AS(parse_sweep("m1=3-1"), Error);
}

TEST_CASE("budget precedence") {
  const auto path = std::filesystem::temp_directory_path() / "weilcodes_test_config.txt";
  {
    std::ofstream f(path);
    f << "# defaults\nthreads = 2\nbudget = 1234  # comment\n";
  }
  ::unsetenv("WEILCODES_BUDGET");
  CHECK(resolve_budget(std::nullopt, std::nullopt) == kDefaultBudget);
  CHECK(resolve_budget(std::nullopt, path.string()) == 1234);
  ::setenv("WEILCODES_BUDGET", "999", 1);
  CHECK(resolve_budget(std::nullopt, path.string()) == 999);
  CHECK(resolve_budget(5, path.string()) == 5);
  ::setenv("WEILCODES_BUDGET", "lots", 1);
  CHECK_THROWS_AS(resolve_budget(std::nullopt, std::nullopt), Error);
  ::unsetenv("WEILCODES_BUDGET");
  CHECK_THROWS_AS(resolve_budget(std::nullopt, std::string("/nonexistent/weilcodes.cfg")), Error);
  std::filesystem::remove(path);
}
