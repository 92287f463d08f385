#include "toriclag/surface.hpp"

#include <algorithm>
#include <sstream>

namespace toriclag {

std::string SignVector::str() const {
  std::string s = "(";
  for (int k = 0; k < size; ++k) {
    s += sign(k) > 0 ? '+' : '-';
    if (k + 1 < size) s += ',';
  }
  s += ')';
  return s;
}

namespace {

int mod2_rank(std::vector<unsigned> vs, int m) {
  int rank = 0;
  for (int bit = 0; bit < m; ++bit) {
    auto it = std::find_if(vs.begin() + rank, vs.end(),
                           [bit](unsigned v) { return (v >> bit) & 1u; });
    if (it == vs.end()) continue;
    std::swap(*it, vs[rank]);
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (static_cast<int>(i) != rank && ((vs[i] >> bit) & 1u)) vs[i] ^= vs[rank];
    ++rank;
  }
  return rank;
}

int bfs_components(const GluedSurface& s) {
  const int n = s.face_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = count;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const auto& e : s.edge_involutions) {
        int g = static_cast<int>(e.apply(static_cast<unsigned>(f)));
        if (comp[g] < 0) {
          comp[g] = count;
          stack.push_back(g);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

GluedSurface glue_sign_copies(int m, const std::vector<unsigned>& edge_flips,
                              const std::vector<int>& edge_labels) {
  if (m < 1 || m > 16) throw std::invalid_argument("sign gluing supports 1 <= m <= 16");
  const int d = static_cast<int>(edge_flips.size());
  if (d < 2) throw std::invalid_argument("polygon needs at least two edges");
  if (!edge_labels.empty() && static_cast<int>(edge_labels.size()) != d)
    throw std::invalid_argument("edge label count mismatch");

  GluedSurface s;
  s.m = m;
  s.polygon_size = d;
  for (int k = 0; k < d; ++k) {
    if (edge_flips[k] == 0 || edge_flips[k] >= (1u << m))
      throw std::runtime_error("degenerate gluing");
    s.edge_involutions.push_back(EdgeInvolution{edge_flips[k]});
    s.edge_labels.push_back(edge_labels.empty() ? k : edge_labels[k]);
  }

  const int faces = s.face_count();
  for (int k = 0; k < d; ++k)
    for (int f = 0; f < faces; ++f) {
      int g = static_cast<int>(s.edge_involutions[k].apply(static_cast<unsigned>(f)));
      if (f < g) s.pairings.push_back({f, g, k});
    }
  if (static_cast<long long>(s.pairings.size()) * 2 != static_cast<long long>(faces) * d)
    throw std::logic_error("edge pairing does not cover every face edge exactly once");

  // Vertex orbits: corner (face, vertex k) is identified across edges k and k+1.
  std::vector<std::vector<bool>> seen(d, std::vector<bool>(faces, false));
  for (int k = 0; k < d; ++k) {
    unsigned a = edge_flips[k];
    unsigned b = edge_flips[(k + 1) % d];
    for (int f = 0; f < faces; ++f) {
      if (seen[k][f]) continue;
      std::vector<std::pair<int, int>> orbit;
      std::vector<unsigned> stack{static_cast<unsigned>(f)};
      seen[k][f] = true;
      while (!stack.empty()) {
        unsigned cur = stack.back();
        stack.pop_back();
        orbit.emplace_back(static_cast<int>(cur), k);
        for (unsigned gen : {a, b}) {
          unsigned nxt = cur ^ gen;
          if (!seen[k][nxt]) {
            seen[k][nxt] = true;
            stack.push_back(nxt);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      s.vertex_orbits.push_back(std::move(orbit));
    }
  }

  s.chi = s.vertex_count() - s.edge_count() + faces;
  s.components = bfs_components(s);
  {
    std::vector<unsigned> gens(edge_flips.begin(), edge_flips.end());
    int subgroup_rank = mod2_rank(gens, m);
    int expected = faces >> subgroup_rank;
    if (expected != s.components)
      throw std::logic_error("component count disagrees with the flip-subgroup order");
  }
  s.connected = s.components == 1;
  s.orientable = orientability(s);
  return s;
}

GluedSurface build_glued_surface(const SlicePolytope& slice, const PolyhedralCone& cone) {
  if (cone.dim() != 3)
    throw std::invalid_argument("surface gluing is defined for m = 3 slices only");
  std::vector<unsigned> flips;
  std::vector<int> labels;
  for (const auto& e : slice.edges) {
    const LatticeVector& l = cone.conormal(e.facet);
    unsigned mask = 0;
    for (int k = 0; k < 3; ++k)
      if (l[k] % 2 != 0) mask |= 1u << k;
    flips.push_back(mask);
    labels.push_back(e.facet);
  }
  return glue_sign_copies(3, flips, labels);
}

int connected_components(const GluedSurface& surface) { return surface.components; }

bool orientability(const GluedSurface& surface) {
  const int faces = surface.face_count();
  std::vector<int> color(faces, 0);
  for (int start = 0; start < faces; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const auto& e : surface.edge_involutions) {
        int g = static_cast<int>(e.apply(static_cast<unsigned>(f)));
        if (color[g] == 0) {
          color[g] = -color[f];
          stack.push_back(g);
        } else if (color[g] != -color[f]) {
          return false;
        }
      }
    }
  }
  return true;
}

int genus(const GluedSurface& surface) {
  if (!surface.connected || !surface.orientable) {
    std::ostringstream os;
    os << "genus undefined: surface is " << (surface.connected ? "" : "disconnected ")
       << (surface.orientable ? "" : "non-orientable ") << "(chi = " << surface.chi
       << ", components = " << surface.components << ")";
    throw TopologyError(os.str(), surface.chi, surface.components);
  }
  if (surface.chi % 2 != 0)
    throw TopologyError("odd Euler characteristic on a closed surface", surface.chi,
                        surface.components);
  return static_cast<int>((2 - surface.chi) / 2);
}

}  // namespace toriclag
