#include "toriclag/exact.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace toriclag;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("primitivity") {
  CHECK(is_primitive({1, -1, -1}));
  CHECK_FALSE(is_primitive({2, 0, 2}));
  CHECK(is_primitive({1, 2, 3}));
  CHECK_THROWS_WITH_AS(is_primitive({0, 0, 0}), "zero vector has no primitivity",
                       std::invalid_argument);
}

TEST_CASE("smith normal form of the identity") {
  auto s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.d == IntMatrix::identity(3));
  CHECK(s.u * IntMatrix::identity(3) * s.v == s.d);
}

TEST_CASE("smith normal form of a single row") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4}}));
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(0, 1) == 0);
}

TEST_CASE("divisors of adjacent conormals of the genus-1 cone") {
  IntMatrix a = IntMatrix::from_rows({{1, -1, -1}, {1, 0, -1}});
  auto expected = oracles::elementary_divisors_via_minors(a);
  REQUIRE(expected.size() == 2);
  CHECK(expected[0] == 1);
  CHECK(expected[1] == 1);
  auto got = smith_normal_form(a).nonzero_divisors();
  CHECK(got == expected);
}

TEST_CASE("smith decomposition properties on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng));
    auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(oracles::laplace_det(s.u)) == 1);
    CHECK(abs(oracles::laplace_det(s.v)) == 1);
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.d(i, i) >= 0);
      if (i + 1 < n && s.d(i + 1, i + 1) != 0) {
        REQUIRE(s.d(i, i) != 0);
        CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
      }
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (j != i) CHECK(s.d(i, j) == 0);
    }
    CHECK(s.nonzero_divisors() == oracles::elementary_divisors_via_minors(a));
  }
}

TEST_CASE("rational rank") {
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({{1, 0, 0}, {0, 1, 0}}) == 2);
  CHECK(rational_rank({{1, 1, 1}, {2, 2, 2}}) == 1);
  // conormals of the genus-1 cone
  std::vector<RationalVector> rows = {to_rational({1, -1, -1}), to_rational({1, 0, -1}),
                                      to_rational({1, 1, 0}), to_rational({1, 2, 3})};
  CHECK(rational_rank(rows) == 3);
}

TEST_CASE("rational rank on constructed degenerate cases") {
  CHECK(rational_rank({{Rat(1, 3), Rat(1, 7)}, {Rat(2, 3), Rat(2, 7)}}) == 1);
  CHECK(rational_rank({{Rat(1, 2), Rat(1, 3), Rat(1, 5)},
                       {Rat(1, 7), Rat(1, 11), Rat(1, 13)},
                       {Rat(9, 14), Rat(14, 33), Rat(18, 65)}}) == 2);  // row2 = row0 + row1
}

TEST_CASE("rational rank agrees with floating SVD on well-conditioned cases") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    std::vector<RationalVector> vs(rows, RationalVector(cols));
    std::vector<std::vector<double>> dv(rows, std::vector<double>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        int x = entry(rng);
        vs[i][j] = x;
        dv[i][j] = x;
      }
    // crude floating rank: Gram-Schmidt with tolerance 1e-8
    int frank = 0;
    std::vector<std::vector<double>> basis;
    for (auto v : dv) {
      for (const auto& b : basis) {
        double proj = 0, bb = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
          proj += v[j] * b[j];
          bb += b[j] * b[j];
        }
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= proj / bb * b[j];
      }
      double norm2 = 0;
      for (double x : v) norm2 += x * x;
      if (norm2 > 1e-8) {
        basis.push_back(v);
        ++frank;
      }
    }
    CHECK(rational_rank(vs) == frank);
  }
}

TEST_CASE("solve_all_ones") {
  SUBCASE("genus-1 conormals admit gamma = (1,0,0)") {
    IntMatrix a = IntMatrix::from_rows({{1, -1, -1}, {1, 0, -1}, {1, 1, 0}, {1, 2, 3}});
    auto gamma = solve_all_ones(a);
    REQUIRE(gamma.has_value());
    CHECK(*gamma == LatticeVector{1, 0, 0});
  }
  SUBCASE("parity obstruction") {
    CHECK_FALSE(solve_all_ones(IntMatrix::from_rows({{2, 0}, {0, 2}})).has_value());
  }
  SUBCASE("direct solve") {
    auto gamma = solve_all_ones(IntMatrix::from_rows({{1, 0}, {1, 1}}));
    REQUIRE(gamma.has_value());
    CHECK(*gamma == LatticeVector{1, 0});
  }
  SUBCASE("solution pairs to one with every row, exactly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + rng() % 4, cols = 2 + rng() % 3;
      IntMatrix a(rows, cols);
      std::vector<LatticeVector> rvecs;
      for (std::size_t i = 0; i < rows; ++i) {
        LatticeVector r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
          a(i, j) = entry(rng);
          r[j] = a(i, j);
        }
        rvecs.push_back(r);
      }
      auto gamma = solve_all_ones(a);
      if (gamma)
        for (const auto& r : rvecs) CHECK(dot(r, *gamma) == 1);
    }
  }
}
