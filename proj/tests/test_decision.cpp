#include <cmath>
#include <random>

#include "doctest.h"
#include "newcomb/decision.hpp"
#include "newcomb/error.hpp"
#include "newcomb/reference.hpp"

using namespace newcomb;

namespace {

constexpr UtilityMatrix kClassic = UtilityMatrix::classic();

// Conditional-probability form: U_j = v1j * rho_1j + v2j * rho_2j.
ExpectedUtilities blend_oracle(const UtilityMatrix& v,
                               const PredictorProfile& p) {
  const double rho11 = p.p1, rho21 = 1.0 - p.p1;
  const double rho12 = 1.0 - p.p2, rho22 = p.p2;
  return {v.v11 * rho11 + v.v21 * rho21, v.v12 * rho12 + v.v22 * rho22};
}

bool close_rel(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

UtilityMatrix random_matrix(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> d(0.0, 2e6);
  return {d(gen), d(gen), d(gen), d(gen)};
}

PredictorProfile random_profile(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  return {d(gen), d(gen)};
}

}  // namespace

TEST_CASE("expected utilities reproduce the classic table") {
  auto eu = expected_utilities(kClassic, {0.5, 0.5});
  CHECK(eu.u1 == 510000.0);
  CHECK(eu.u2 == 500000.0);

  eu = expected_utilities(kClassic, {1.0, 1.0});
  CHECK(eu.u1 == 10000.0);
  CHECK(eu.u2 == 1000000.0);

  eu = expected_utilities(kClassic, {0.0, 0.0});
  CHECK(eu.u1 == 1010000.0);
  CHECK(eu.u2 == 0.0);
}

TEST_CASE("constant matrix gives constant utilities") {
  const UtilityMatrix v{7.5, 7.5, 7.5, 7.5};
  for (double p1 : {0.0, 0.3, 1.0}) {
    for (double p2 : {0.0, 0.9, 1.0}) {
      const auto eu = expected_utilities(v, {p1, p2});
      CHECK(eu.u1 == 7.5);
      CHECK(eu.u2 == 7.5);
    }
  }
}

TEST_CASE("affine form agrees with the conditional blend") {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 1000; ++t) {
    const auto v = random_matrix(gen);
    const auto p = random_profile(gen);
    const auto eu = expected_utilities(v, p);
    const auto ref = blend_oracle(v, p);
    REQUIRE(close_rel(eu.u1, ref.u1));
    REQUIRE(close_rel(eu.u2, ref.u2));
  }
}

TEST_CASE("validation rejects bad inputs") {
  CHECK_THROWS_AS(expected_utilities(kClassic, {1.5, 0.0}), ValidationError);
  CHECK_THROWS_AS(expected_utilities(kClassic, {0.0, -0.1}), ValidationError);
  CHECK_THROWS_AS(expected_utilities(kClassic, {NAN, 0.0}), ValidationError);
  CHECK_THROWS_AS(expected_utilities({-1, 0, 0, 0}, {0.5, 0.5}),
                  ValidationError);
  CHECK_THROWS_AS(expected_utilities({INFINITY, 0, 0, 0}, {0.5, 0.5}),
                  ValidationError);
  CHECK_THROWS_AS(choose(kClassic, {2.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(decision_boundary({0, 0, NAN, 0}), ValidationError);
  // Zero is admitted: the classic table itself has v12 = 0.
  CHECK_NOTHROW(expected_utilities({0, 0, 0, 0}, {0, 1}));
}

TEST_CASE("choose: landmarks and ties") {
  CHECK(choose(kClassic, {1.0, 1.0}) == CChoice::kC2);
  CHECK(choose(kClassic, {0.5, 0.5}) == CChoice::kC1);
  CHECK(choose(kClassic, {0.3, 0.7}) == CChoice::kC1);
  CHECK(choose({3, 3, 3, 3}, {0.2, 0.8}) == CChoice::kC1);
  CHECK(choose({0, 0, 0, 0}, {1.0, 1.0}) == CChoice::kC1);
}

TEST_CASE("margin on the uncorrelated line is the dominance margin") {
  // Substituting p2 = 1 - p1: U1 - U2 = 1010000 - 1e6 p1 - 1e6 (1 - p1).
  for (int i = 0; i <= 100; ++i) {
    const double p1 = i / 100.0;
    const auto ref = blend_oracle(kClassic, {p1, 1.0 - p1});
    CHECK(std::abs((ref.u1 - ref.u2) - 10000.0) <= 1e-6);
    const auto eu = expected_utilities(kClassic, {p1, 1.0 - p1});
    CHECK(std::abs((eu.u1 - eu.u2) - 10000.0) <= 1e-6);
    CHECK(choose(kClassic, {p1, 1.0 - p1}) == CChoice::kC1);
  }
}

TEST_CASE("decision boundary coefficients") {
  const auto b = decision_boundary(kClassic);
  CHECK(b.a1 == -1000000.0);
  CHECK(b.a2 == -1000000.0);
  CHECK(b.b == -1010000.0);
  // Dividing by -1e6 flips the inequality: p1 + p2 <= 1.01.
  CHECK(b.a1 == b.a2);
  CHECK(b.b / b.a1 == doctest::Approx(1.01).epsilon(1e-12));

  const auto zero = decision_boundary({0, 0, 0, 0});
  CHECK(zero.a1 == 0.0);
  CHECK(zero.a2 == 0.0);
  CHECK(zero.b == 0.0);
  CHECK(zero.prefers_c1({0.3, 0.9}));
}

TEST_CASE("symmetric matrix boundary is p1 >= p2") {
  const UtilityMatrix v{2, 0, 0, 2};
  const auto b = decision_boundary(v);
  CHECK(b.a1 == 2.0);
  CHECK(b.a2 == -2.0);
  CHECK(b.b == 0.0);
  // Brute force over an 11x11 grid with the blend oracle.
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const PredictorProfile p{i / 10.0, j / 10.0};
      const auto ref = blend_oracle(v, p);
      CHECK(b.prefers_c1(p) == (ref.u1 >= ref.u2));
      CHECK(b.prefers_c1(p) == (i >= j));
    }
  }
}

TEST_CASE("boundary agrees with choose on random inputs") {
  std::mt19937_64 gen(1234);
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto v = random_matrix(gen);
    const auto p = random_profile(gen);
    const bool c1 = choose(v, p) == CChoice::kC1;
    mismatches += c1 != decision_boundary(v).prefers_c1(p);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("choice is invariant under translation and positive scaling") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> shift(0.0, 1e5);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int t = 0; t < 1000; ++t) {
    const auto v = random_matrix(gen);
    const auto p = random_profile(gen);
    const double c = shift(gen);
    const double s = scale(gen);
    const UtilityMatrix moved{v.v11 + c, v.v12 + c, v.v21 + c, v.v22 + c};
    const UtilityMatrix scaled{v.v11 * s, v.v12 * s, v.v21 * s, v.v22 * s};
    const auto base = choose(v, p);
    // Skip near-ties where rounding of the transformed matrix may flip.
    const auto eu = expected_utilities(v, p);
    if (std::abs(eu.u1 - eu.u2) < 1e-6 * std::max(eu.u1, eu.u2)) continue;
    REQUIRE(choose(moved, p) == base);
    REQUIRE(choose(scaled, p) == base);
  }
}

TEST_CASE("dominant choice") {
  CHECK(dominant_choice(kClassic) == CChoice::kC1);
  CHECK(kClassic.v11 - kClassic.v12 == 10000.0);
  CHECK(kClassic.v21 - kClassic.v22 == 10000.0);
  CHECK_FALSE(dominant_choice({5, 5, 8, 8}).has_value());
  CHECK(dominant_choice({1, 2, 3, 4}) == CChoice::kC2);
  CHECK_FALSE(dominant_choice({2, 1, 3, 4}).has_value());
}

TEST_CASE("dominance implies C1 along the uncorrelated line") {
  std::mt19937_64 gen(5);
  int checked = 0;
  while (checked < 200) {
    const auto v = random_matrix(gen);
    if (dominant_choice(v) != CChoice::kC1) continue;
    ++checked;
    for (int i = 0; i <= 20; ++i) {
      const double p1 = i / 20.0;
      CHECK(choose(v, {p1, 1.0 - p1}) == CChoice::kC1);
    }
  }
}

TEST_CASE("region grid") {
  SUBCASE("classic landmarks at resolution 101") {
    const auto grid = region_grid(kClassic, 101);
    CHECK(grid.size() == 101u * 101u);
    CHECK(grid.coordinate(100) == 1.0);
    CHECK(grid.coordinate(50) == 0.5);
    CHECK(grid.at(100, 100) == CChoice::kC2);
    CHECK(grid.at(50, 50) == CChoice::kC1);
  }
  SUBCASE("corners at resolution 2") {
    const auto grid = region_grid(kClassic, 2);
    CHECK(grid.size() == 4u);
    CHECK(grid.at(0, 0) == CChoice::kC1);
    CHECK(grid.at(1, 0) == CChoice::kC1);
    CHECK(grid.at(0, 1) == CChoice::kC1);
    CHECK(grid.at(1, 1) == CChoice::kC2);
  }
  SUBCASE("all-zero matrix is all C1") {
    for (int r : {2, 7, 33}) {
      const auto grid = region_grid({0, 0, 0, 0}, r);
      for (auto c : grid.cells()) CHECK(c == CChoice::kC1);
    }
  }
  SUBCASE("p1 runs fastest in storage") {
    const auto grid = region_grid(kClassic, 3);
    // (p1=1, p2=0.5): 1.5 > 1.01 -> C2, stored at index j*3 + i = 5.
    CHECK(grid.cells()[5] == CChoice::kC2);
    CHECK(grid.cells()[7] == CChoice::kC2);
    CHECK(grid.cells()[2] == CChoice::kC1);
  }
  SUBCASE("resolution below 2 is rejected") {
    CHECK_THROWS_AS(region_grid(kClassic, 1), ArgumentError);
    CHECK_THROWS_AS(region_grid(kClassic, 0), ArgumentError);
  }
}

TEST_CASE("region grid is monotone for the classic matrix") {
  const auto grid = region_grid(kClassic, 51);
  for (int i = 0; i < 51; ++i) {
    for (int j = 0; j < 51; ++j) {
      if (grid.at(i, j) != CChoice::kC2) continue;
      if (i + 1 < 51) CHECK(grid.at(i + 1, j) == CChoice::kC2);
      if (j + 1 < 51) CHECK(grid.at(i, j + 1) == CChoice::kC2);
    }
  }
}

TEST_CASE("parallel region grid matches the serial reference") {
  std::mt19937_64 gen(77);
  for (int t = 0; t < 10; ++t) {
    const auto v = random_matrix(gen);
    const auto ref = reference::region_grid(v, 41);
    for (int threads : {1, 3, 8}) {
      CHECK(region_grid(v, 41, threads) == ref);
    }
  }
}
