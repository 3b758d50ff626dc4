#include <catch2/catch_amalgamated.hpp>

#include "clifflab/verify.hpp"

using namespace clifflab;

TEST_CASE("every suite passes at the default seed") {
  for (const auto& name : suite_names()) {
    SuiteReport rep = run_suite(name);
    CHECK(rep.suite == name);
    CHECK(!rep.checks.empty());
    for (const auto& c : rep.checks) {
      INFO(name << ": " << c.name << " residual " << c.residual
                << " tolerance " << c.tolerance);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("every suite passes at an unrelated seed") {
  VerifyOptions opt;
  opt.seed = 99;
  for (const auto& name : suite_names()) {
    SuiteReport rep = run_suite(name, opt);
    REQUIRE(rep.seed == 99);
    for (const auto& c : rep.checks) {
      INFO(name << ": " << c.name << " residual " << c.residual);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("requesting all runs the suites in the published order") {
  VerifyOptions opt;
  opt.weyl_n = 4;  // keep the sweep short here
  auto reports = run_requested("all", opt);
  auto names = suite_names();
  REQUIRE(reports.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    REQUIRE(reports[i].suite == names[i]);

  auto single = run_requested("rotors", opt);
  REQUIRE(single.size() == 1);
  REQUIRE(single[0].suite == "rotors");
}

TEST_CASE("unknown suites and bad orders are rejected") {
  REQUIRE_THROWS_AS(run_suite("spinors"), std::invalid_argument);
  VerifyOptions opt;
  opt.weyl_n = 1;
  REQUIRE_THROWS_AS(verify_weyl(opt), std::invalid_argument);
  opt.weyl_n = 65;
  REQUIRE_THROWS_AS(verify_weyl(opt), std::invalid_argument);
}

TEST_CASE("a fixed weyl order restricts the sweep") {
  VerifyOptions opt;
  opt.weyl_n = 8;
  SuiteReport rep = verify_weyl(opt);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK(c.name.find("(n = 8)") != std::string::npos);
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  VerifyOptions opt;
  opt.seed = 5;
  SuiteReport a = run_suite("hopf", opt);
  SuiteReport b = run_suite("hopf", opt);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    REQUIRE(a.checks[i].name == b.checks[i].name);
    REQUIRE(a.checks[i].residual == b.checks[i].residual);
  }
  REQUIRE(a.all_pass());
  REQUIRE(a.max_residual() <= 1e-12);
}
