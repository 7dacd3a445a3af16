#include <doctest.h>

#include "gridext/errors.hpp"
#include "gridext/harness.hpp"

using namespace gridext;

TEST_CASE("suite names") {
  const auto names = suite_names();
  CHECK(names == std::vector<std::string>{"counting", "extremes", "bounds", "entropy", "sampling", "all"});
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
}

TEST_CASE("deterministic suites pass and carry provenance") {
  for (const auto* name : {"counting", "extremes", "bounds", "entropy"}) {
    const auto suite = run_suite(name);
    CHECK_MESSAGE(suite.passed(), name);
    CHECK(!suite.checks.empty());
    CHECK(!suite.shapes.empty());
    for (const auto& c : suite.checks) {
      CHECK(!c.operation.empty());
      CHECK(!c.relation.empty());
      CHECK(!c.expected.empty());
    }
  }
}

TEST_CASE("extremes suite covers the four cubes") {
  const auto suite = run_suite("extremes");
  CHECK(suite.shapes.size() == 4);
  CHECK(suite.checks.size() == 4 * 5);
}

TEST_CASE("bounds suite reports vacuous bounds instead of dropping them") {
  const auto suite = run_suite("bounds");
  std::size_t vacuous = 0;
  for (const auto& c : suite.checks) vacuous += c.relation.find("vacuous") != std::string::npos;
  CHECK(vacuous > 0);
}

TEST_CASE("sampling suite") {
  HarnessConfig cfg;
  cfg.samples = 5'000;
  cfg.mcmc_steps = 500;
  const auto suite = run_suite("sampling", cfg);
  CHECK(suite.checks.size() == 2);
  CHECK(suite.passed());
}

TEST_CASE("conjecture scan") {
  const auto rows = conjecture_scan(16);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].m == 2);
  CHECK(rows[0].n == 2);
  CHECK(rows[0].ratio == 0.25);
  CHECK(rows[0].avg_jump_exact == "1");
  // [3]^2 and [2]^3 both average 4 over their 42 and 48 extensions.
  CHECK(rows[1].size == 8);
  CHECK(rows[1].avg_jump == 4.0);
  CHECK(rows[2].size == 9);
  CHECK(rows[2].avg_jump == 4.0);
  for (const auto& r : rows) CHECK(r.method == "exact");
}

TEST_CASE("conjecture scan falls back to mcmc past the state cap") {
  HarnessConfig cfg;
  cfg.state_cap = 10;
  cfg.samples = 200;
  cfg.mcmc_steps = 200;
  const auto rows = conjecture_scan(9, cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].method == "exact");  // [2]^2 has 6 down-sets
  CHECK(rows[2].method == "mcmc");
  CHECK(rows[2].std_error > 0);
  CHECK(std::abs(rows[2].ratio - 4.0 / 9) < 5 * rows[2].std_error + 1e-9);
}
