#include "toriclag/cone.hpp"

#include "example_cones.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace toriclag;
using example_cones::genus_cone;
using example_cones::sum_of_conormals;

TEST_CASE("cone constructor validation") {
  CHECK_THROWS_AS(PolyhedralCone(3, {{2, 0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyhedralCone(3, {{1, 0, 0}, {1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PolyhedralCone(1, {{1}}), std::invalid_argument);
}

TEST_CASE("strong convexity") {
  CHECK(is_strongly_convex(genus_cone(1)));
  CHECK_FALSE(is_strongly_convex(PolyhedralCone(3, {{1, 0, 0}, {-1, 0, 0}})));
  CHECK(is_strongly_convex(PolyhedralCone(2, {{1, 0}, {0, 1}})));
}

TEST_CASE("extreme rays of the genus-1 cone") {
  auto rays = extreme_rays(genus_cone(1)).rays;
  REQUIRE(rays.size() == 4);  // one per facet adjacency of a 4-facet cone
  CHECK(rays[0] == LatticeVector{1, 0, 1});  // adjacent pair (lambda_1, lambda_2)
  // postcondition: nonnegative pairing with every conormal, exactly
  for (const auto& r : rays)
    for (const auto& l : genus_cone(1).conormals()) CHECK(dot(r, l) >= 0);
}

TEST_CASE("extreme rays in the plane by duality") {
  auto rays = extreme_rays(PolyhedralCone(2, {{1, 0}, {0, 1}})).rays;
  REQUIRE(rays.size() == 2);
  CHECK(std::find(rays.begin(), rays.end(), LatticeVector{1, 0}) != rays.end());
  CHECK(std::find(rays.begin(), rays.end(), LatticeVector{0, 1}) != rays.end());
}

TEST_CASE("misordered conormals are rejected") {
  // genus-1 conormals with two entries swapped: not a facet-adjacency order
  PolyhedralCone bad(3, {{1, -1, -1}, {1, 1, 0}, {1, 0, -1}, {1, 2, 3}});
  CHECK_THROWS_WITH_AS(extreme_rays(bad), "conormals not in facet-adjacency order",
                       std::runtime_error);
}

TEST_CASE("goodness of the genus family") {
  for (int g : {1, 2, 3, 7}) {
    auto result = is_good(genus_cone(g));
    CHECK(result.good);
    CHECK(result.shortcut_checked);
    CHECK(result.witness.empty());
  }
}

TEST_CASE("adjacent pair (1,0,0),(1,2,0) breaks goodness with divisor 2") {
  PolyhedralCone cone(3, {{1, 0, 0}, {1, 2, 0}, {1, 0, 1}});
  // oracle confirmation: determinantal divisors of the adjacent pair
  auto divisors =
      oracles::elementary_divisors_via_minors(IntMatrix::from_rows({{1, 0, 0}, {1, 2, 0}}));
  REQUIRE(divisors.size() == 2);
  CHECK(divisors[1] == 2);

  auto result = is_good(cone);
  CHECK_FALSE(result.good);
  CHECK(result.shortcut_checked);
  CHECK(result.witness == std::vector<int>{0, 1});
  CHECK(result.witness_divisor == 2);
}

TEST_CASE("goodness is invariant under adjacency-preserving relabeling") {
  auto ls = example_cones::genus_family_conormals(2);
  for (std::size_t shift = 1; shift < ls.size(); ++shift) {
    std::vector<LatticeVector> rotated;
    for (std::size_t i = 0; i < ls.size(); ++i) rotated.push_back(ls[(i + shift) % ls.size()]);
    CHECK(is_good(PolyhedralCone(3, rotated)).good);
  }
  std::vector<LatticeVector> reversed(ls.rbegin(), ls.rend());
  CHECK(is_good(PolyhedralCone(3, reversed)).good);
}

TEST_CASE("goodness is invariant under unimodular change of basis") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 12; ++trial) {
    // random unimodular U as a product of elementary row operations
    IntMatrix u = IntMatrix::identity(3);
    for (int step = 0; step < 6; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      u.add_row_multiple(i, j, coef(rng));
    }
    for (int g : {1, 3}) {
      auto ls = example_cones::genus_family_conormals(g);
      std::vector<LatticeVector> mapped;
      for (const auto& l : ls) {
        LatticeVector out(3, Int(0));
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) out[r] += u(r, c) * l[c];
        mapped.push_back(out);
      }
      CHECK(is_good(PolyhedralCone(3, mapped)).good);
    }
  }
}

TEST_CASE("reeb admissibility") {
  auto cone = genus_cone(1);
  CHECK(reeb_admissible(cone, {4, 2, 1}));  // sum of the conormals
  CHECK_FALSE(reeb_admissible(cone, {0, 0, 1}));
  CHECK_FALSE(reeb_admissible(cone, {0, 0, 0}));
}

TEST_CASE("sum of conormals is always admissible on the family") {
  for (int g = 1; g <= 6; ++g) {
    auto cone = genus_cone(g);
    CHECK(reeb_admissible(cone, sum_of_conormals(cone)));
  }
  PolyhedralCone octant(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(reeb_admissible(octant, sum_of_conormals(octant)));
}

TEST_CASE("height-one element") {
  SUBCASE("the genus family always admits (1,0,0)") {
    for (int g = 1; g <= 6; ++g) {
      auto cy = calabi_yau_gamma(genus_cone(g));
      REQUIRE(cy.exists());
      CHECK(*cy.gamma == LatticeVector{1, 0, 0});
      for (const auto& l : genus_cone(g).conormals()) CHECK(dot(*cy.gamma, l) == 1);
    }
  }
  SUBCASE("direct two-facet solve") {
    auto cy = calabi_yau_gamma(PolyhedralCone(2, {{1, 0}, {1, 2}}));
    REQUIRE(cy.exists());
    CHECK(dot(*cy.gamma, LatticeVector{1, 0}) == 1);
    CHECK(dot(*cy.gamma, LatticeVector{1, 2}) == 1);
  }
  SUBCASE("exhaustive search oracle fixes the small cases") {
    // brute force over gamma in [-10,10]^2
    auto search = [](const std::vector<LatticeVector>& ls) -> std::optional<LatticeVector> {
      for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b) {
          LatticeVector g{a, b};
          bool ok = true;
          for (const auto& l : ls)
            if (dot(g, l) != 1) ok = false;
          if (ok) return g;
        }
      return std::nullopt;
    };
    // {(2,1),(0,1)} does admit a solution: gamma = (0,1)
    auto expected = search({{2, 1}, {0, 1}});
    REQUIRE(expected.has_value());
    CHECK(*expected == LatticeVector{0, 1});
    auto cy = calabi_yau_gamma(PolyhedralCone(2, {{2, 1}, {0, 1}}));
    REQUIRE(cy.exists());
    CHECK(*cy.gamma == LatticeVector{0, 1});

    // {(2,1),(2,-1)} has none: certificate by search and by elementary divisors
    CHECK_FALSE(search({{2, 1}, {2, -1}}).has_value());
    auto divisors =
        oracles::elementary_divisors_via_minors(IntMatrix::from_rows({{2, 1}, {2, -1}}));
    REQUIRE(divisors.size() == 2);
    CHECK(divisors[1] == 4);
    CHECK_FALSE(calabi_yau_gamma(PolyhedralCone(2, {{2, 1}, {2, -1}})).exists());
  }
}
