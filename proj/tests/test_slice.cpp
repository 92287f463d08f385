#include "toriclag/slice.hpp"

#include "example_cones.hpp"

#include <doctest.h>

using namespace toriclag;
using example_cones::genus_cone;
using example_cones::sum_of_conormals;

TEST_CASE("slice spec rejects a zero normal") {
  CHECK_THROWS_AS(SliceSpec(RationalVector{0, 0, 0}, Rat(1)), std::invalid_argument);
}

TEST_CASE("assumptions hold for the genus-1 default slice") {
  auto check = check_assumptions(genus_cone(1), SliceSpec({4, 2, 1}, Rat(2)));
  CHECK(check.interior_met);
  CHECK(check.zeta_transverse);
  CHECK(check.ok());
}

TEST_CASE("hyperplane through the apex along a conormal misses the interior") {
  auto cone = genus_cone(1);
  auto check = check_assumptions(cone, SliceSpec(to_rational(cone.conormal(0)), Rat(0)));
  CHECK_FALSE(check.interior_met);
  CHECK_FALSE(check.warnings.empty());
}

TEST_CASE("transversality fails only on zero-level faces") {
  auto cone = genus_cone(1);

  // If zeta lies in the span of a face's active conormals, the pairing with
  // that face vanishes identically, so the face meets the hyperplane only at
  // level 0. Direct witness: zeta = lambda_1 - 2 lambda_2 = (-1,-1,1) vanishes
  // on the extreme ray (1,0,1) shared by facets 1 and 2.
  RationalVector zeta{-1, -1, 1};
  LatticeVector ray{1, 0, 1};
  CHECK(dot(zeta, ray) == 0);
  for (const auto& l : cone.conormals()) CHECK(dot(ray, l) >= 0);
  CHECK(rational_rank({to_rational(cone.conormal(0)), to_rational(cone.conormal(1)), zeta}) == 2);

  auto check = check_assumptions(cone, SliceSpec(zeta, Rat(0)));
  CHECK(check.interior_met);  // ray values (0, 1, 1, -8): both signs present
  CHECK_FALSE(check.zeta_transverse);
  CHECK(check.failing_face == std::vector<int>{0, 1});

  // At a nonzero level the same zeta is transverse everywhere.
  auto shifted = check_assumptions(cone, SliceSpec(zeta, Rat(1)));
  CHECK(shifted.zeta_transverse);
}

TEST_CASE("both assumptions hold for zeta = (0,0,1) at level 1") {
  // Exhaustive face scan: no face of the genus-1 cone has (0,0,1) in the span
  // of its active conormals, so transversality cannot fail at a nonzero level.
  auto cone = genus_cone(1);
  for (const auto& active : face_active_sets(cone)) {
    std::vector<RationalVector> span;
    for (int i : active) span.push_back(to_rational(cone.conormal(i)));
    int base = rational_rank(span);
    span.push_back(RationalVector{0, 0, 1});
    CHECK(rational_rank(span) == base + 1);
  }
  auto check = check_assumptions(cone, SliceSpec({0, 0, 1}, Rat(1)));
  CHECK(check.ok());
}

TEST_CASE("slice of the genus-1 cone at the default level") {
  auto cone = genus_cone(1);
  SliceSpec spec({4, 2, 1}, Rat(2));
  auto poly = compute_slice(cone, spec);
  REQUIRE(poly.vertices.size() == 4);
  // <(1,0,1),(4,2,1)> = 5, so the vertex on that ray is (2/5)(1,0,1)
  CHECK(poly.vertices[0] == RationalVector{Rat(2, 5), Rat(0), Rat(2, 5)});
  for (const auto& v : poly.vertices) CHECK(dot(v, spec.zeta) == spec.level);
}

TEST_CASE("slice polygon of the family is a (g+3)-gon") {
  for (int g = 1; g <= 10; ++g) {
    auto cone = genus_cone(g);
    RationalVector xi = sum_of_conormals(cone);
    Rat level = dot(xi, calabi_yau_gamma(cone).gamma.value()) / 2;
    auto poly = compute_slice(cone, SliceSpec(xi, level));
    CHECK(static_cast<int>(poly.vertices.size()) == g + 3);
    CHECK(static_cast<int>(poly.edges.size()) == g + 3);
  }
}

TEST_CASE("edge labels partition the conormal indices") {
  auto poly = compute_slice(genus_cone(2), SliceSpec(sum_of_conormals(genus_cone(2)), Rat(5)));
  std::vector<bool> seen(poly.edges.size(), false);
  for (const auto& e : poly.edges) {
    CHECK_FALSE(seen[e.facet]);
    seen[e.facet] = true;
  }
}

TEST_CASE("slice scales exactly with the level") {
  auto cone = genus_cone(1);
  RationalVector xi{4, 2, 1};
  for (Rat t : {Rat(2), Rat(7, 3)}) {
    auto base = compute_slice(cone, SliceSpec(xi, Rat(2)));
    auto scaled = compute_slice(cone, SliceSpec(xi, Rat(2) * t));
    REQUIRE(base.vertices.size() == scaled.vertices.size());
    for (std::size_t i = 0; i < base.vertices.size(); ++i)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(scaled.vertices[i][k] == t * base.vertices[i][k]);
  }
}

TEST_CASE("hyperplane missing a ray is rejected") {
  CHECK_THROWS_WITH_AS(compute_slice(genus_cone(1), SliceSpec({0, 0, 1}, Rat(1))),
                       "hyperplane does not cross all rays", std::runtime_error);
}
