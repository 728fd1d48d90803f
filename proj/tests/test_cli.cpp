#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "ineqlab/cli.hpp"

using namespace ineqlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check emits schema-stable JSON") {
  const auto r = run({"check", "hanner", "--space", "lp:1.5:4", "--trials", "3", "--seed", "5"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"check_id", "lhs", "rhs", "margin", "tolerance", "holds", "seed"}) CHECK(j.contains(key));
    CHECK(j["check_id"] == "hanner_classic");
    ++n;
  }
  CHECK(n == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "hanner", "--space", "lp:0.5:4"}).code == 2);
  CHECK(run({"check", "no_such_check"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"search", "zhang-falsifier"}).code == 0);
  CHECK(run({"search", "two-unif-falsifier"}).code == 0);
  CHECK(run({"search", "revhh", "--trials", "2000"}).code == 0);
  CHECK(run({"check", "zhang_strengthened", "--trials", "1", "--seed", "1"}).code <= 1);
  CHECK(run({"function-audit", "--f", "xlog1p"}).code == 0);
  CHECK(run({"majorize", "--kind", "hlp", "--x", "3,1", "--y", "2,2"}).code == 0);
}

TEST_CASE("falsifier output") {
  const auto r = run({"search", "zhang-falsifier"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["strengthened"]["holds"] == false);
  CHECK(j["strengthened"]["margin"].get<double>() == doctest::Approx(-53.0 / 324.0));
  CHECK(j["strengthened"].contains("seed"));
  CHECK(j["original"]["margin"].get<double>() == doctest::Approx(123.0));
}

TEST_CASE("constants") {
  const auto r = run({"constants", "--p", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cnj_analytic"].get<double>() == doctest::Approx(2.0));
  CHECK(j.contains("N"));
  CHECK(j["C"].is_null() == false);
}

TEST_CASE("reference runs are byte-identical") {
  const std::vector<std::string> args{"search", "hanner", "--trials", "500", "--reference", "--seed", "9"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}
