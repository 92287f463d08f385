// The genus-g cone family used across the test suites.
#pragma once

#include "toriclag/cone.hpp"

namespace example_cones {

using toriclag::Int;
using toriclag::LatticeVector;
using toriclag::PolyhedralCone;
using toriclag::Rat;
using toriclag::RationalVector;

// lambda_1 = (1,-1,-1); lambda_k = (1, k-2, (k-2)^2 - 1) for k = 2..g+2;
// lambda_{g+3} = (1, -2, g^2). The g = 1 cone carries the explicit fourth
// conormal (1, 2, 3) instead of the general tail formula.
inline std::vector<LatticeVector> genus_family_conormals(int genus) {
  std::vector<LatticeVector> ls;
  ls.push_back({1, -1, -1});
  if (genus == 1) {
    ls.push_back({1, 0, -1});
    ls.push_back({1, 1, 0});
    ls.push_back({1, 2, 3});
    return ls;
  }
  for (int k = 2; k <= genus + 2; ++k)
    ls.push_back({1, Int(k - 2), Int((k - 2) * (k - 2) - 1)});
  ls.push_back({1, -2, Int(genus) * Int(genus)});
  return ls;
}

inline PolyhedralCone genus_cone(int genus) {
  return PolyhedralCone(3, genus_family_conormals(genus));
}

inline RationalVector sum_of_conormals(const PolyhedralCone& cone) {
  RationalVector xi(cone.dim(), Rat(0));
  for (const auto& l : cone.conormals())
    for (int k = 0; k < cone.dim(); ++k) xi[k] += Rat(l[k]);
  return xi;
}

}  // namespace example_cones
