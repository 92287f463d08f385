#include "toriclag/slice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toriclag {

SliceSpec::SliceSpec(RationalVector zeta_in, Rat level_in)
    : zeta(std::move(zeta_in)), level(std::move(level_in)) {
  bool nonzero = std::any_of(zeta.begin(), zeta.end(), [](const Rat& x) { return x != 0; });
  if (!nonzero) throw std::invalid_argument("slice normal must be nonzero");
}

namespace {

// Sign pattern of <., zeta> over the conical hull of the given rays decides
// whether the closed face meets the hyperplane away from the apex.
bool face_meets_hyperplane(const std::vector<Rat>& ray_values, const Rat& level) {
  bool pos = false, neg = false, zero = false;
  for (const Rat& v : ray_values) {
    if (v > 0) pos = true;
    if (v < 0) neg = true;
    if (v == 0) zero = true;
  }
  if (level > 0) return pos;
  if (level < 0) return neg;
  return zero || (pos && neg);
}

}  // namespace

AssumptionCheck check_assumptions(const PolyhedralCone& cone, const SliceSpec& spec) {
  if (static_cast<int>(spec.zeta.size()) != cone.dim())
    throw std::invalid_argument("slice normal dimension mismatch");

  AssumptionCheck out;
  ExtremeRaySet rays = extreme_rays(cone);

  std::vector<Rat> values;
  values.reserve(rays.rays.size());
  for (const auto& r : rays.rays) values.push_back(dot(spec.zeta, r));

  out.interior_met = face_meets_hyperplane(values, spec.level);
  if (!out.interior_met)
    out.diagnostic = "hyperplane misses the open cone";

  if (spec.level <= 0)
    out.warnings.push_back(
        "nonpositive slice level: the interior-witness construction for a Reeb-direction "
        "normal assumes a positive level");

  out.zeta_transverse = true;
  for (const auto& active : face_active_sets(cone)) {
    // Values of <., zeta> on the face spanned by the rays vanishing on `active`.
    std::vector<Rat> face_values;
    for (std::size_t k = 0; k < rays.rays.size(); ++k) {
      bool in_face = true;
      for (int i : active)
        if (dot(rays.rays[k], cone.conormal(i)) != 0) {
          in_face = false;
          break;
        }
      if (in_face) face_values.push_back(values[k]);
    }
    if (face_values.empty() || !face_meets_hyperplane(face_values, spec.level)) continue;

    std::vector<RationalVector> span;
    for (int i : active) span.push_back(to_rational(cone.conormal(i)));
    int base_rank = rational_rank(span);
    span.push_back(spec.zeta);
    if (rational_rank(span) == base_rank) {
      out.zeta_transverse = false;
      out.failing_face = active;
      std::ostringstream os;
      os << "zeta lies in the conormal span of the face with active conormals {";
      for (std::size_t i = 0; i < active.size(); ++i) os << (i ? "," : "") << (active[i] + 1);
      os << "}";
      out.diagnostic = os.str();
      break;
    }
  }
  return out;
}

SlicePolytope compute_slice(const PolyhedralCone& cone, const SliceSpec& spec) {
  if (cone.dim() != 3) throw std::invalid_argument("slice polygons are computed for m = 3 only");
  ExtremeRaySet rays = extreme_rays(cone);
  const int d = cone.facet_count();

  SlicePolytope poly;
  poly.zeta = spec.zeta;
  poly.level = spec.level;

  for (const auto& r : rays.rays) {
    Rat pairing = dot(spec.zeta, r);
    if (pairing <= 0) throw std::runtime_error("hyperplane does not cross all rays");
    Rat scale = spec.level / pairing;
    RationalVector v;
    for (const Int& x : r) v.push_back(scale * Rat(x));
    poly.vertices.push_back(std::move(v));
  }
  for (int j = 0; j < d; ++j) poly.edges.push_back({(j + d - 1) % d, j, j});

  // Exact re-checks of the construction invariants.
  for (const auto& v : poly.vertices) {
    if (dot(v, spec.zeta) != spec.level) throw std::logic_error("slice vertex off the hyperplane");
    for (const auto& l : cone.conormals())
      if (dot(v, l) < 0) throw std::logic_error("slice vertex outside the cone");
  }
  for (const auto& e : poly.edges) {
    const auto& l = cone.conormal(e.facet);
    if (dot(poly.vertices[e.tail], l) != 0 || dot(poly.vertices[e.head], l) != 0)
      throw std::logic_error("slice edge not contained in its facet");
    for (int k = 0; k < d; ++k)
      if (k != e.tail && k != e.head && dot(poly.vertices[k], l) <= 0)
        throw std::logic_error("slice polygon not in convex position");
  }
  return poly;
}

}  // namespace toriclag
