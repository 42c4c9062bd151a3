#pragma once

#include <array>
#include <string>
#include <vector>

#include "ringmap/combinatorial_map.hpp"
#include "ringmap/patch.hpp"
#include "ringmap/sequence.hpp"

namespace ringmap {

/// The n-prism ring with q-4 subdivision vertices per quadrangle, j[i] of
/// them on the inner edge. Vertex ids are dense from 0.
struct RingComplex {
  RingLayout layout;
  int num_vertices = 0;
  std::vector<int> inner_corner;               // c_i
  std::vector<int> outer_corner;               // o_i
  std::vector<std::vector<int>> inner_tails;   // tails on the inner edge of quad i
  std::vector<std::vector<int>> outer_tails;   // tails on the outer edge of quad i
  /// Inner cycle, counterclockwise (inner domain on the left).
  std::vector<int> inner_cycle;
  /// Outer cycle with the outer domain on the left (clockwise).
  std::vector<int> outer_cycle;
  /// Ring faces in ring order, interior on the left.
  std::vector<std::vector<int>> faces;
};

RingComplex make_ring(const RingLayout& layout);

/// A finished map with its distinguished ring.
struct AssembledMap {
  CombinatorialMap map;
  /// Map face ids of the ring in cyclic order.
  std::vector<int> ring;
  FaceMarks ring_marks() const;
};

/// Glue labelled patches into the ring: inner boundary position i goes to
/// ring.inner_cycle[i], outer to ring.outer_cycle[i]. Roles must match.
AssembledMap glue(const RingComplex& ring, const Patch& inner, const Patch& outer);

/// All maps obtained by gluing the two patches into the ring defined by the
/// inner boundary sequence, over every rotation and reflection of either
/// patch; deduplicated and sorted by ring-marked canonical code.
std::vector<AssembledMap> assemble(const Patch& inner, const Patch& outer, int q);

/// One side of a ring: the domain bounded by it.
struct RingSide {
  /// Boundary vertices with the domain on the left.
  std::vector<int> cycle;
  BoundaryWord word;
  BoundarySequence sequence;
  std::vector<int> faces;  // map face ids of the domain
  int interior_vertices = 0;
  /// The domain as a patch over map vertex ids.
  Patch patch(const CombinatorialMap& map) const;
};

struct RingInfo {
  std::vector<int> faces;  // cyclic order
  std::array<RingSide, 2> sides;
};

/// Checks that `faces` (cyclic order) is a ring: consecutive faces share
/// exactly one edge (two when n = 2), no other pairs touch, the spokes are
/// vertex-disjoint and the ring separates the sphere into two non-empty
/// domains bounded by simple cycles. Throws NotARing.
RingInfo analyze_ring(const CombinatorialMap& map, std::vector<int> faces);

/// The ring formed by all q-gons of the map. Throws NotARing.
RingInfo ring_of(const CombinatorialMap& map, int q);

/// Every ring of n q-gons whose complement consists of faces of size p.
std::vector<RingInfo> find_rings(const CombinatorialMap& map, int p, int q, int n);

struct EulerReport {
  std::vector<std::string> failures;
  int excess = 0;  // measured x + x'
  bool ok() const { return failures.empty(); }
};

/// 3V = 2E, V - E + F = 2, face sizes in {p, q}, n ring faces, and the ring
/// relation for the measured excess. `ring` may be empty when p != q.
EulerReport euler_check(const CombinatorialMap& map, int p, int q, int n,
                        const std::vector<int>& ring = {});

/// M_p(p,4).
AssembledMap prism(int p);
/// M_4(4,q): prism(q) with q-4 edges laid across one lateral square.
AssembledMap decorate_prism(int q);

enum class FulleroidVariant { Q5t2, Q5t3 };
/// M_4(5, 5t+2) or M_4(5, 5t+3) from the self-complemented sequences bb.
AssembledMap fulleroid_M45(int t, FulleroidVariant variant);
BoundarySequence fulleroid_sequence(int t, FulleroidVariant variant);

}  // namespace ringmap
