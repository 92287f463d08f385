// Hyperplane slices of the moment cone and the standing transversality
// assumptions behind the Lagrangian construction.
#pragma once

#include "toriclag/cone.hpp"
#include "toriclag/exact.hpp"

#include <string>
#include <vector>

namespace toriclag {

/// The slicing hyperplane {y : <y, zeta> = level}.
struct SliceSpec {
  RationalVector zeta;
  Rat level;

  SliceSpec(RationalVector zeta_in, Rat level_in);
};

/// Convex polygon cut out of the cone: vertex i lies on extreme ray i, edge j
/// lies in facet j and connects the vertices of the two rays bounding it.
struct SlicePolytope {
  RationalVector zeta;
  Rat level;
  std::vector<RationalVector> vertices;
  struct Edge {
    int tail;
    int head;
    int facet;
  };
  std::vector<Edge> edges;
};

struct AssumptionCheck {
  bool interior_met = false;     // hyperplane meets the open cone
  bool zeta_transverse = false;  // zeta avoids every relevant facet-conormal span
  std::vector<int> failing_face;  // active conormal set where transversality fails
  std::vector<std::string> warnings;
  std::string diagnostic;
  bool ok() const { return interior_met && zeta_transverse; }
};

AssumptionCheck check_assumptions(const PolyhedralCone& cone, const SliceSpec& spec);

SlicePolytope compute_slice(const PolyhedralCone& cone, const SliceSpec& spec);

}  // namespace toriclag
