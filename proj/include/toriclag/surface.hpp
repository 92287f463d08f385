// Closed surface glued from 2^m sign-labelled copies of the slice polygon,
// with Euler characteristic, orientability and genus.
#pragma once

#include "toriclag/cone.hpp"
#include "toriclag/slice.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toriclag {

/// One of the 2^m sign patterns labelling a polygon copy. Bit k set means the
/// k-th sign is -1.
struct SignVector {
  unsigned mask = 0;
  int size = 0;
  int sign(int k) const { return (mask >> k) & 1u ? -1 : +1; }
  std::string str() const;
};

/// Mod-2 reduction of a conormal, acting on sign patterns by coordinate flips.
struct EdgeInvolution {
  unsigned flips = 0;
  unsigned apply(unsigned face_mask) const { return face_mask ^ flips; }
};

struct GluedSurface {
  int m = 0;
  int polygon_size = 0;
  std::vector<EdgeInvolution> edge_involutions;  // per polygon edge, cyclic order
  std::vector<int> edge_labels;                  // facet label per polygon edge

  struct Pairing {
    int face_a;
    int face_b;
    int edge;
  };
  std::vector<Pairing> pairings;

  /// Orbits of (face, polygon vertex) pairs; vertex k sits between edges k, k+1.
  std::vector<std::vector<std::pair<int, int>>> vertex_orbits;

  long long chi = 0;
  bool connected = false;
  int components = 0;
  bool orientable = false;

  int face_count() const { return 1 << m; }
  long long edge_count() const { return static_cast<long long>(pairings.size()); }
  long long vertex_count() const { return static_cast<long long>(vertex_orbits.size()); }
  SignVector face_signs(int face) const { return SignVector{static_cast<unsigned>(face), m}; }
};

class TopologyError : public std::runtime_error {
 public:
  TopologyError(const std::string& what, long long chi, int components)
      : std::runtime_error(what), chi(chi), components(components) {}
  long long chi;
  int components;
};

/// Core gluing: 2^m copies of a d-gon, edge k of copy s glued to edge k of
/// copy s ^ edge_flips[k]. Labels default to edge positions.
GluedSurface glue_sign_copies(int m, const std::vector<unsigned>& edge_flips,
                              const std::vector<int>& edge_labels = {});

GluedSurface build_glued_surface(const SlicePolytope& slice, const PolyhedralCone& cone);

int connected_components(const GluedSurface& surface);
bool orientability(const GluedSurface& surface);

/// (2 - chi) / 2; throws TopologyError when disconnected or non-orientable.
int genus(const GluedSurface& surface);

}  // namespace toriclag
