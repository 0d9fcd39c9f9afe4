#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "cdo/flagtop.hpp"
#include "cli.hpp"

using namespace cdo;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

QMatrix parse_matrix(const nlohmann::json& j) {
  QMatrix m = zero_matrix(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j.at(0).size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t k = 0; k < j[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = Rational::parse(j[i][k].get<std::string>());
  return m;
}

}  // namespace

TEST_CASE("reports round-trip exact values") {
  Run r = call({"lie", "killing", "sl3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(parse_matrix(j["killing"]) == killing_form(sl(3)));

  Run lv = call({"lie", "levels", "borel(sl2)"});
  auto jl = nlohmann::json::parse(lv.out);
  CHECK(parse_matrix(jl["critical"]) == critical_level(borel_of_sl(2).algebra));
  CHECK(parse_matrix(jl["admissible_levels"]["particular"]) == critical_level(sl(2)));

  Run f = call({"flag", "ch2", "--type", "G", "--rank", "2", "--parabolic", "none"});
  auto jf = nlohmann::json::parse(f.out);
  CHECK(parse_matrix(jf["ch2"]["q"]) == ch2_class(build_root_system('G', 2), {}).q);
  CHECK(jf["ch2"]["zero"] == true);
  CHECK(jf["weyl_order"] == 12);
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args{"classify", "--space", "G/P", "--algebra", "sl3"};
  Run a = call(args), b = call(args);
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["inputs_digest"] != nlohmann::json::parse(call({"classify", "--space", "G/B", "--algebra", "sl3"}).out)["inputs_digest"]);
}

TEST_CASE("exit codes") {
  CHECK(call({"brst", "square", "--algebra", "heisenberg3", "--max-weight", "2"}).code == 0);
  CHECK(call({"brst", "square", "sl2", "--max-weight", "1"}).code == 1);
  Run bad = call({"frobnicate"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  Run level = call({"algebroid", "check", "sl2", "--level", "x/y"});
  CHECK(level.code == 2);
  CHECK(level.out.empty());
  CHECK(call({"brst", "cohomology", "--algebra", "sl2", "--module", "currents:minus-killing", "--max-weight", "1",
              "--relative", "h"})
            .code == 2);
  CHECK(call({"classify", "--space", "G/P", "--algebra", "sl2"}).code == 2);
  CHECK(call({"flag", "ch2", "--type", "A", "--rank", "2", "--parabolic", "1,x"}).code == 2);
  CHECK(call({"brst", "cohomology", "--algebra", "sl2", "--module", "currents:minus-killing", "--max-weight", "1"})
            .code == 0);
  CHECK(call({"group", "verify-dual", "SL2", "--level", "critical"}).code == 0);
  CHECK(call({"group", "verify-dual", "GL2"}).code == 2);
}
