#include "d4g2/suites.hpp"

#include "doctest.h"
#include "json.hpp"

using namespace d4g2;

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.order = 15;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.order = 16;
  c.max_depth = Rational(7, 2);
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.max_depth = Rational(1, 3);
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c.max_depth = Rational(3, 2);
  c.command = "nope";
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  CHECK_THROWS(parse_format("yaml"));
  CHECK(parse_format("markdown") == OutputFormat::markdown);
}

TEST_CASE("empty report") {
  CHECK(emit_report({}, OutputFormat::text) == "0 checks, 0 failed\n");
  CHECK(all_pass({}));
  CHECK(nlohmann::json::parse(emit_report({}, OutputFormat::json)).empty());
}

TEST_CASE("json schema") {
  CheckResult f = make_check("series identity", false);
  f.first_mismatch = 17;
  CheckResult h = make_check("hwv", true);
  h.scalar = "-1";
  h.eigenvalues = {"1/2", "3/5"};
  auto j = nlohmann::json::parse(emit_report({f, h}, OutputFormat::json));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["check"] == "series identity");
  CHECK(j[0]["status"] == "FAIL");
  CHECK(j[0]["detail"]["first_mismatch"] == 17);
  CHECK(j[1]["status"] == "PASS");
  CHECK(j[1]["detail"]["scalar"] == "-1");
  CHECK(j[1]["detail"]["eigenvalues"] == nlohmann::json({"1/2", "3/5"}));
  CHECK_FALSE(all_pass({f, h}));
  std::string text = emit_report({f, h}, OutputFormat::text);
  CHECK(text.find("FAIL  series identity\n    first_mismatch: 17\n") != std::string::npos);
  CHECK(text.find("2 checks, 1 failed") != std::string::npos);
}

TEST_CASE("hwv command on one cell") {
  RunConfig c;
  c.command = "hwv";
  c.module = "V1";
  c.depth = Rational(3, 2);
  Report r = run_suite(c);
  CHECK(all_pass(r));
  bool seen = false;
  for (const auto& x : r)
    if (x.eigenvalues == std::vector<std::string>{"1/2", "3/5"}) {
      seen = true;
      CHECK(x.lhs == "144*-234-234*");
    }
  CHECK(seen);
  c.depth.reset();
  CHECK_THROWS(run_suite(c));
}

TEST_CASE("tables command") {
  RunConfig c;
  c.command = "tables";
  c.golden_dir = D4G2_GOLDEN_DIR;
  c.table_id = "quartic----+";
  Report r = run_suite(c);
  REQUIRE(r.size() == 1);
  CHECK(r[0].pass);
  CHECK(emit_report(r, OutputFormat::markdown).find("| 11*22* | 122* |") != std::string::npos);
  c.table_id = "ns-L0-V0";
  CHECK_FALSE(run_suite(c)[0].pass);
}

TEST_CASE("graded dims command") {
  Report r = graded_dims_suite(Rational(3, 2));
  CHECK(all_pass(r));
  bool ns64 = false;
  for (const auto& x : r) ns64 = ns64 || (x.check == "NS states at depth 3/2 match the graded dimension" && x.lhs == "64");
  CHECK(ns64);
}

TEST_CASE("deterministic output") {
  RunConfig c;
  c.command = "finite-algebra";
  CHECK(emit_report(run_suite(c), OutputFormat::json) == emit_report(run_suite(c), OutputFormat::json));
}
