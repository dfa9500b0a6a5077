#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lmg_otto/crossing.hpp"

using namespace lmg_otto;
using Catch::Approx;

TEST_CASE("crossing: anisotropic field sweep") {
  // E2 = E3 <=> J^2 gamma = 4 h^2, so h* = sqrt(1.6) / 2 for J = 2, gamma = 0.4.
  const auto c = find_level_crossing({2.0, 0.4, 0.0}, CrossingAxis::field, {2, 3}, {0.1, 2.0});
  REQUIRE(c);
  CHECK(c->location == Approx(0.632455532033675866).margin(1e-10));
  CHECK(std::abs(c->residual) <= 1e-10);
  const Spectrum s = lmg_spectrum({2.0, 0.4, c->location});
  CHECK(std::abs(s.energy(2) - s.energy(3)) <= 1e-10);
}

TEST_CASE("crossing: Ising coupling has none for h > 0") {
  CHECK_FALSE(find_level_crossing({2.0, 0.0, 0.0}, CrossingAxis::field, {2, 3}, {0.1, 2.0}));
  // the h = 0 touch is a degeneracy, not a sign change
  CHECK_FALSE(find_level_crossing({2.0, 0.0, 0.0}, CrossingAxis::field, {2, 3}, {0.0, 2.0}));
}

TEST_CASE("crossing: isotropic coupling crosses at h = 1") {
  const auto c = find_level_crossing({2.0, 1.0, 0.0}, CrossingAxis::field, {2, 3}, {0.1, 2.0});
  REQUIRE(c);
  CHECK(c->location == Approx(1.0).margin(1e-10));
  CHECK(c->pair == std::pair{2, 3});
}

TEST_CASE("crossing: coupling axis") {
  // h = 1, gamma = 0.4: J^2 gamma = 4 => J = sqrt(10)
  const auto c = find_level_crossing({0.0, 0.4, 1.0}, CrossingAxis::coupling, {2, 3}, {1.0, 4.0});
  REQUIRE(c);
  CHECK(c->location == Approx(std::sqrt(10.0)).margin(1e-9));
}

TEST_CASE("crossing: predicate agreement on random brackets", "[property]") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> J(0.2, 5.0), g(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double j = J(rng), gamma = g(rng);
    const Bracket b{0.05, 3.0};
    const auto c = find_level_crossing({j, gamma, 0.0}, CrossingAxis::field, {2, 3}, b);
    const bool expected = gamma > 0.0 && 0.5 * j * std::sqrt(gamma) > b.lo &&
                          0.5 * j * std::sqrt(gamma) < b.hi;
    CHECK(bool(c) == expected);
    if (c) CHECK(c->location == Approx(0.5 * j * std::sqrt(gamma)).margin(1e-9));
  }
}

TEST_CASE("crossing: invalid input") {
  CHECK_THROWS_AS(
      find_level_crossing({2.0, 0.4, 0.0}, CrossingAxis::field, {2, 2}, {0.1, 2.0}), Error);
  try {
    (void)find_level_crossing({2.0, 0.4, 0.0}, CrossingAxis::field, {2, 3}, {-1.0, 2.0});
    FAIL("expected invalid bracket");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_bracket);
  }
  CHECK_THROWS_AS(
      find_level_crossing({2.0, 0.4, 0.0}, CrossingAxis::field, {2, 5}, {0.1, 2.0}), Error);
}
