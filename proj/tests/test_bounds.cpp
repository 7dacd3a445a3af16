#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gridext/bounds.hpp"
#include "gridext/errors.hpp"

using namespace gridext;

TEST_CASE("beta") {
  CHECK(beta(2) == 2.0);
  CHECK(beta(4) == 1.0);
  CHECK(beta(3) == doctest::Approx(1.2924812503605781).epsilon(1e-15));
  CHECK_THROWS_AS(beta(1), DomainError);
  CHECK_THROWS_AS(beta(0), DomainError);
}

TEST_CASE("entropy_lower_bound") {
  const auto r32 = entropy_lower_bound(3, 2);
  CHECK(r32.real() == doctest::Approx(9 * (std::log2(3.0) - 2)).epsilon(1e-15));
  CHECK(r32.real() == doctest::Approx(-3.735).epsilon(1e-3));
  CHECK(r32.vacuous);
  CHECK(r32.real() < std::log2(42.0));
  const auto r22 = entropy_lower_bound(2, 2);
  CHECK(r22.real() == -4.0);
  CHECK(r22.vacuous);
  const auto big = entropy_lower_bound(1024, 2);
  CHECK(big.real() == std::ldexp(8.0, 20));
  CHECK_FALSE(big.vacuous);
}

TEST_CASE("avg_jump_lower_bound") {
  const double m = std::ldexp(1.0, 192);
  const auto r = avg_jump_lower_bound(m, 2);
  CHECK(r.real() == std::ldexp(1.0, 383));
  CHECK_FALSE(r.vacuous);
  CHECK(avg_jump_lower_bound(41, 2).vacuous);
  CHECK(avg_jump_lower_bound(3, 2).vacuous);
  CHECK(avg_jump_lower_bound(3, 2).real() < 4.0);  // exhaustive average over [3]^2 is 4
  CHECK(avg_jump_lower_bound(std::ldexp(1.0, 48), 2).vacuous);
  CHECK_THROWS_AS(avg_jump_lower_bound(3, 1), DomainError);
}

TEST_CASE("pits threshold and fraction bound") {
  CHECK(pits_threshold(4, 2, 1).real() == doctest::Approx(std::numbers::e).epsilon(1e-15));
  CHECK(pits_fraction_bound(2, 1).real() == 2.0);
  CHECK(pits_threshold(3, 2, 2).real() == doctest::Approx(1.019355685672142).epsilon(1e-14));
  CHECK(pits_fraction_bound(2, 2).real() == 1.0);
  CHECK(pits_fraction_bound(2, 2).vacuous);
  CHECK(pits_fraction_bound(2, 8).real() == 0.25);
  CHECK_FALSE(pits_fraction_bound(2, 8).vacuous);
  CHECK_FALSE(pits_threshold(3, 2, 2).vacuous);
  CHECK_THROWS_AS(pits_threshold(3, 2, 0), DomainError);
  CHECK_THROWS_AS(pits_fraction_bound(2, -1), DomainError);
}

TEST_CASE("almost_regular_fraction") {
  CHECK(almost_regular_fraction(std::ldexp(1.0, 768), 2).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_FALSE(almost_regular_fraction(std::ldexp(1.0, 768), 2).vacuous);
  CHECK(almost_regular_fraction(3, 2).vacuous);
  const auto edge = almost_regular_fraction(std::ldexp(1.0, 48), 2);
  CHECK(edge.real() == 1.0);
  CHECK(edge.vacuous);
}

TEST_CASE("markov_tail") {
  CHECK(markov_tail(1).real() == 1.0);
  CHECK(markov_tail(1).vacuous);
  CHECK(markov_tail(4).real() == 0.25);
  CHECK(markov_tail(10).real() == doctest::Approx(0.1));
  CHECK_FALSE(markov_tail(10).vacuous);
  CHECK_THROWS_AS(markov_tail(0.5), DomainError);
}

TEST_CASE("eq1_check examples") {
  CHECK(eq1_check(std::vector{1, 3}));
  CHECK(eq1_check(std::vector{2, 2, 2}));
  CHECK(eq1_check(std::vector{7}));
  CHECK_THROWS_AS(eq1_check(std::vector<int>{}), DomainError);
  CHECK_THROWS_AS(eq1_check(std::vector{0, 2}), DomainError);
}

TEST_CASE("eq1_check holds on 10^4 random vectors") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 10'000; ++trial) {
    std::vector<int> b(1 + rng() % 10);
    for (auto& x : b) x = 1 + static_cast<int>(rng() % 20);
    REQUIRE(eq1_check(b));
  }
}

TEST_CASE("bound_reports layout") {
  const auto reports = bound_reports(3, 2, 2.0, 4.0);
  std::vector<std::string> names;
  for (const auto& r : reports) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"beta", "antichain_ceiling", "prop1_lower", "prop1_upper",
                                          "entropy_lower_bound", "avg_jump_lower_bound", "almost_regular_fraction",
                                          "factorial_product_lower_bound", "lemma2_upper_bound", "pits_threshold",
                                          "pits_fraction_bound", "markov_tail"});
  CHECK(std::get<BigCount>(reports[7].value) == 24);
  CHECK(std::get<BigCount>(reports[8].value) == 19683);
  CHECK(bound_reports(3, 2, std::nullopt, std::nullopt).size() == 9);
  CHECK(bound_reports(1000, 2, std::nullopt, std::nullopt).size() == 7);
}
