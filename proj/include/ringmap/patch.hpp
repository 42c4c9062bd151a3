#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ringmap/combinatorial_map.hpp"
#include "ringmap/sequence.hpp"

namespace ringmap {

/// A disk filled with p-gons. Interior vertices have degree 3, boundary
/// vertices degree 2 (corners) or 3 (tails).
struct Patch {
  int p = 0;
  int num_vertices = 0;
  /// Vertex cycles, interior on the left.
  std::vector<std::vector<int>> faces;
  /// Boundary cycle with the patch on the left.
  std::vector<int> boundary;

  /// The patch closed by one extra face (last) bounded by the reversed boundary.
  CombinatorialMap to_map() const;
  /// Marks only the closing face.
  FaceMarks outer_marks() const;
};

struct PatchStats {
  int v2 = 0;
  int v3 = 0;
  int x = 0;
  int f = 0;
};

PatchStats patch_stats(const Patch& patch);
BoundaryWord boundary_word(const Patch& patch);
BoundarySequence boundary_sequence(const Patch& patch);

/// Isomorphism class of the patch (reflections included).
CanonicalCode patch_code(const Patch& patch);

/// Throws StructuralError when a patch invariant fails: face sizes, interior
/// degree 3, boundary degree 2 or 3, simple boundary, both Euler identities.
void validate_patch(const Patch& patch);

struct AbstractGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  bool is_path() const;
};

/// Faces of the patch, adjacent when they share an edge.
AbstractGraph pgon_adjacency_graph(const Patch& patch);

/// Interior-vertex and face counts forced on any p-gon filling of the
/// boundary `w` (p = 6 uses the hexagonal-lattice area of the boundary
/// walk). Empty when no filling can exist.
struct EulerProfile {
  int f = 0;
  int x = 0;
};
std::optional<EulerProfile> euler_profile(int p, const BoundaryWord& w);

}  // namespace ringmap
