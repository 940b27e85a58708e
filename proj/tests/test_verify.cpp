#include <doctest.h>

#include "cliffgen/verify.hpp"

using namespace cliffgen;

namespace {

void all_pass(const std::string& suite, const SuiteOptions& opts = {}) {
  const auto reports = run_suite(suite, opts);
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    INFO(suite << " " << r.identity_id << " err=" << r.max_abs_error << " at " << r.worst_at << " " << r.error);
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(is_suite("thm1"));
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("thm9"));
  CHECK_THROWS_AS(run_suite("thm9"), PreconditionError);
  CHECK(suite_names().back() == "all");
}

TEST_CASE("even m override is rejected") {
  SuiteOptions o;
  o.m = 4;
  CHECK_THROWS_WITH_AS(run_suite("thm1", o), "m must be odd", PreconditionError);
  CHECK_THROWS_AS(run_suite("lemma1", o), PreconditionError);
}

TEST_CASE("fast suites pass") {
  for (const char* s : {"coeffs", "leibniz", "lemma1", "thm1", "corollary3", "corollary4", "classical-gf",
                        "monogenicity", "qpoly", "ckgeneric"})
    all_pass(s);
}

TEST_CASE("overrides narrow the parameter sweep") {
  SuiteOptions o;
  o.m = 5;
  o.k = 1;
  const auto reports = run_suite("thm1", o);
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    bool has_m5 = false;
    for (const auto& [key, v] : r.params) has_m5 |= key == "m" && v == "5";
    CHECK(has_m5);
  }
}

TEST_CASE("tolerance override can fail a suite") {
  SuiteOptions o;
  o.tol = 0;
  o.m = 3;
  const auto reports = run_suite("corollary3", o);
  bool any_failed = false;
  for (const auto& r : reports) any_failed |= !r.passed;
  CHECK(any_failed);
}

TEST_CASE("gegenbauer reduction with integer alpha") {
  // whole-grid status is reported by the acceptance binary
  SuiteOptions o;
  o.alpha = 2;
  all_pass("thm2", o);
}
