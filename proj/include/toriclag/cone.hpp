// Strongly convex rational polyhedral cones: validity, goodness, Reeb
// admissibility and the height-one lattice element.
#pragma once

#include "toriclag/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclag {

/// The defining data of the moment cone: ambient dimension m and the inward
/// facet conormals, kept in cyclic facet-adjacency order for m = 3.
class PolyhedralCone {
 public:
  PolyhedralCone(int dim, std::vector<LatticeVector> conormals);

  int dim() const { return dim_; }
  int facet_count() const { return static_cast<int>(conormals_.size()); }
  const std::vector<LatticeVector>& conormals() const { return conormals_; }
  const LatticeVector& conormal(int i) const { return conormals_[i]; }

 private:
  int dim_;
  std::vector<LatticeVector> conormals_;
};

/// Primitive generators of the 1-dimensional faces. For m = 3 they come out in
/// cyclic order: ray i is orthogonal to conormals i and i+1 (mod d).
struct ExtremeRaySet {
  std::vector<LatticeVector> rays;
};

struct CalabiYauData {
  std::optional<LatticeVector> gamma;
  bool exists() const { return gamma.has_value(); }
};

/// Verdict of the goodness test, with the violating conormal subset on failure.
struct GoodnessResult {
  bool good = false;
  bool shortcut_checked = false;  // the 3-dim consecutive-difference test also ran
  std::vector<int> witness;       // conormal indices of the violating subset
  Int witness_divisor = 0;        // offending elementary divisor; 0 = linear dependence
  std::string detail;
  explicit operator bool() const { return good; }
};

bool is_strongly_convex(const PolyhedralCone& cone);

ExtremeRaySet extreme_rays(const PolyhedralCone& cone);

/// One maximal active conormal set per proper nonzero face (rays and facets).
std::vector<std::vector<int>> face_active_sets(const PolyhedralCone& cone);

GoodnessResult is_good(const PolyhedralCone& cone);

/// True iff <r, xi> > 0 exactly for every extreme ray r.
bool reeb_admissible(const PolyhedralCone& cone, const RationalVector& xi);

CalabiYauData calabi_yau_gamma(const PolyhedralCone& cone);

}  // namespace toriclag
