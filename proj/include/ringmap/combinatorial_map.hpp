#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ringmap {

/// Labeling-independent code of a map. Two maps have equal codes iff they are
/// isomorphic, orientation reversal included.
struct CanonicalCode {
  std::vector<std::uint16_t> entries;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Dart-based rotation system of a map on the sphere.
///
/// Darts are dense integers. `alpha` pairs the two darts of an edge, `sigma`
/// moves to the next dart counterclockwise around the common tail vertex. The
/// face to the left of dart d continues with sigma^-1(alpha(d)).
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  CombinatorialMap(std::vector<int> sigma, std::vector<int> alpha);

  /// Builds the map from face cycles. Every face lists its vertices with the
  /// face interior on the left, so each directed edge occurs exactly once.
  /// When `index` is given it receives, per map vertex, the input vertex id
  /// and, per input face, the map face index.
  struct FaceListIndex {
    std::vector<int> vertex_id;
    std::vector<int> map_face;
  };
  static CombinatorialMap from_faces(const std::vector<std::vector<int>>& faces,
                                     FaceListIndex* index = nullptr);

  int num_darts() const { return static_cast<int>(sigma_.size()); }
  int num_vertices() const { return static_cast<int>(vertex_dart_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_faces() const { return static_cast<int>(face_dart_.size()); }

  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int face_next(int d) const { return sigma_inv_[alpha_[d]]; }

  int tail(int d) const { return tail_[d]; }
  int head(int d) const { return tail_[alpha_[d]]; }
  /// Face to the left of d.
  int face_of(int d) const { return face_[d]; }

  int vertex_dart(int v) const { return vertex_dart_[v]; }
  int face_dart(int f) const { return face_dart_[f]; }
  int degree(int v) const;
  int face_size(int f) const;

  /// Vertices of face f in traversal order (interior on the left).
  std::vector<int> face_vertices(int f) const;
  std::vector<int> face_darts(int f) const;
  /// Neighbors of v in counterclockwise order.
  std::vector<int> neighbors(int v) const;

  bool is_connected() const;
  bool is_cubic() const;
  int euler_characteristic() const {
    return num_vertices() - num_edges() + num_faces();
  }

  /// Applies a dart permutation: dart d becomes perm[d].
  CombinatorialMap relabeled(const std::vector<int>& perm) const;
  CombinatorialMap mirrored() const;

  const std::vector<int>& sigma_array() const { return sigma_; }
  const std::vector<int>& alpha_array() const { return alpha_; }

 private:
  void build_orbits();

  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> alpha_;
  std::vector<int> tail_;
  std::vector<int> face_;
  std::vector<int> vertex_dart_;
  std::vector<int> face_dart_;
};

/// Per-face boolean marks (e.g. "belongs to the ring", "outer face").
using FaceMarks = std::vector<std::uint8_t>;

/// Code produced by one (root dart, orientation) traversal. Vertex neighbor
/// lists are terminated by 0 unless the map is cubic; when marks are given,
/// every dart also contributes the mark of the face on its left (in the
/// traversal orientation).
CanonicalCode rooted_code(const CombinatorialMap& map, int root, bool reversed,
                          const FaceMarks& marks = {});

/// Minimal rooted code over all darts and both orientations. Requires a
/// connected 3-valent map.
CanonicalCode canonical_code(const CombinatorialMap& map, const FaceMarks& marks = {});

/// Number of (root, orientation) pairs reproducing the canonical code, i.e.
/// the order of the automorphism group including reflections. Requires a
/// connected 3-valent map.
int aut_order(const CombinatorialMap& map, const FaceMarks& marks = {});

struct CanonicalForm {
  CanonicalCode code;
  int aut_order = 0;
  int root = 0;
  bool reversed = false;
  /// Vertex numbering of the canonical traversal (vertex -> 0-based label).
  std::vector<int> vertex_label;
};

/// Works for any connected map (patches closed by a marked outer face have
/// degree-2 vertices).
CanonicalForm canonical_form(const CombinatorialMap& map, const FaceMarks& marks = {});

bool is_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

/// Throws StructuralError unless the map is connected and 3-valent.
void require_cubic(const CombinatorialMap& map);

}  // namespace ringmap
