#include "toriclag/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toriclag {

namespace {

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string index_list(const std::vector<int>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << (idx[i] + 1);
  return os.str();
}

}  // namespace

PolyhedralCone::PolyhedralCone(int dim, std::vector<LatticeVector> conormals)
    : dim_(dim), conormals_(std::move(conormals)) {
  if (dim_ < 2) throw std::invalid_argument("cone dimension must be at least 2");
  if (conormals_.empty()) throw std::invalid_argument("cone needs at least one conormal");
  for (const auto& l : conormals_) {
    if (static_cast<int>(l.size()) != dim_)
      throw std::invalid_argument("conormal dimension mismatch");
    if (!is_primitive(l)) throw std::invalid_argument("conormal is not primitive");
  }
  for (std::size_t i = 0; i < conormals_.size(); ++i)
    for (std::size_t j = i + 1; j < conormals_.size(); ++j)
      if (conormals_[i] == conormals_[j]) throw std::invalid_argument("duplicate conormal");
}

bool is_strongly_convex(const PolyhedralCone& cone) {
  std::vector<RationalVector> rows;
  for (const auto& l : cone.conormals()) rows.push_back(to_rational(l));
  return rational_rank(rows) == cone.dim();
}

ExtremeRaySet extreme_rays(const PolyhedralCone& cone) {
  if (!is_strongly_convex(cone))
    throw std::invalid_argument("extreme rays need a strongly convex cone");
  const auto& ls = cone.conormals();
  const int d = cone.facet_count();
  ExtremeRaySet out;

  if (cone.dim() == 2) {
    for (const auto& l : ls) {
      LatticeVector r{l[1], -l[0]};
      for (int sign = 0; sign < 2; ++sign) {
        bool inside = true;
        for (const auto& other : ls)
          if (dot(r, other) < 0) {
            inside = false;
            break;
          }
        if (inside) {
          LatticeVector p = primitive_part(r);
          if (std::find(out.rays.begin(), out.rays.end(), p) == out.rays.end())
            out.rays.push_back(p);
        }
        for (Int& x : r) x = -x;
      }
    }
    return out;
  }

  if (cone.dim() != 3)
    throw std::invalid_argument("extreme ray enumeration is implemented for m = 2 and m = 3");

  for (int i = 0; i < d; ++i) {
    LatticeVector r = cross(ls[i], ls[(i + 1) % d]);
    if (is_zero(r)) throw std::runtime_error("conormals not in facet-adjacency order");
    r = primitive_part(r);
    bool pos = false, neg = false;
    for (const auto& l : ls) {
      Int p = dot(r, l);
      if (p > 0) pos = true;
      if (p < 0) neg = true;
    }
    if (pos && neg) throw std::runtime_error("conormals not in facet-adjacency order");
    if (neg)
      for (Int& x : r) x = -x;
    out.rays.push_back(r);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (is_zero(cross(out.rays[i], out.rays[j])))
        throw std::runtime_error("conormals not in facet-adjacency order");
  return out;
}

std::vector<std::vector<int>> face_active_sets(const PolyhedralCone& cone) {
  ExtremeRaySet rays = extreme_rays(cone);
  std::set<std::vector<int>> sets;
  for (const auto& r : rays.rays) {
    std::vector<int> active;
    for (int i = 0; i < cone.facet_count(); ++i)
      if (dot(r, cone.conormal(i)) == 0) active.push_back(i);
    sets.insert(active);
  }
  for (int i = 0; i < cone.facet_count(); ++i) sets.insert({i});
  return {sets.begin(), sets.end()};
}

namespace {

// Consecutive-difference criterion for 3-dim cones whose conormals all have
// first coordinate 1: each cyclic difference (dp, dq) must have |dp| = 1,
// |dq| = 1, or dp, dq nonzero and coprime. A zero component fails the third
// alternative.
bool shortcut_good(const PolyhedralCone& cone, int& bad_index) {
  const auto& ls = cone.conormals();
  const int d = cone.facet_count();
  for (int i = 0; i < d; ++i) {
    const auto& a = ls[i];
    const auto& b = ls[(i + 1) % d];
    Int dp = b[1] - a[1];
    Int dq = b[2] - a[2];
    bool ok = abs(dp) == 1 || abs(dq) == 1 || (dp != 0 && dq != 0 && gcd(dp, dq) == 1);
    if (!ok) {
      bad_index = i;
      return false;
    }
  }
  return true;
}

}  // namespace

GoodnessResult is_good(const PolyhedralCone& cone) {
  if (!is_strongly_convex(cone))
    throw std::invalid_argument("goodness test needs a strongly convex cone");

  GoodnessResult result;
  result.good = true;

  for (const auto& subset : face_active_sets(cone)) {
    std::vector<LatticeVector> rows;
    std::vector<RationalVector> qrows;
    for (int i : subset) {
      rows.push_back(cone.conormal(i));
      qrows.push_back(to_rational(cone.conormal(i)));
    }
    if (rational_rank(qrows) != static_cast<int>(subset.size())) {
      result.good = false;
      result.witness = subset;
      result.witness_divisor = 0;
      result.detail = "conormals {" + index_list(subset) + "} are linearly dependent";
      break;
    }
    SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows(rows));
    for (const Int& div : snf.nonzero_divisors())
      if (div != 1) {
        result.good = false;
        result.witness = subset;
        result.witness_divisor = div;
        std::ostringstream os;
        os << "conormals {" << index_list(subset) << "} span a non-saturated sublattice"
           << " (elementary divisor " << div << ")";
        result.detail = os.str();
        break;
      }
    if (!result.good) break;
  }

  bool all_height_one = cone.dim() == 3;
  if (all_height_one)
    for (const auto& l : cone.conormals())
      if (l[0] != 1) all_height_one = false;
  if (all_height_one) {
    int bad = -1;
    bool sg = shortcut_good(cone, bad);
    result.shortcut_checked = true;
    if (sg != result.good) {
      std::ostringstream os;
      os << "goodness criteria disagree: lattice test says " << (result.good ? "good" : "bad")
         << ", consecutive-difference test says " << (sg ? "good" : "bad");
      throw std::logic_error(os.str());
    }
  }
  return result;
}

bool reeb_admissible(const PolyhedralCone& cone, const RationalVector& xi) {
  if (static_cast<int>(xi.size()) != cone.dim())
    throw std::invalid_argument("reeb vector dimension mismatch");
  for (const auto& r : extreme_rays(cone).rays)
    if (dot(xi, r) <= 0) return false;
  return true;
}

CalabiYauData calabi_yau_gamma(const PolyhedralCone& cone) {
  auto gamma = solve_all_ones(IntMatrix::from_rows(cone.conormals()));
  if (gamma)
    for (const auto& l : cone.conormals())
      if (dot(*gamma, l) != 1) throw std::logic_error("height-one solve produced a bad solution");
  return CalabiYauData{std::move(gamma)};
}

}  // namespace toriclag
