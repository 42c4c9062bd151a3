#include "ringmap/patch.hpp"

#include <algorithm>
#include <set>

#include "ringmap/errors.hpp"

namespace ringmap {

CombinatorialMap Patch::to_map() const {
  auto all = faces;
  all.emplace_back(boundary.rbegin(), boundary.rend());
  return CombinatorialMap::from_faces(all);
}

namespace {

struct ClosedPatch {
  CombinatorialMap map;
  FaceMarks marks;
  std::vector<int> input_vertex;  // map vertex -> patch vertex id
};

ClosedPatch close_patch(const Patch& patch) {
  auto all = patch.faces;
  all.emplace_back(patch.boundary.rbegin(), patch.boundary.rend());
  CombinatorialMap::FaceListIndex index;
  ClosedPatch out{CombinatorialMap::from_faces(all, &index), {}, {}};
  out.input_vertex = std::move(index.vertex_id);
  out.marks.assign(out.map.num_faces(), 0);
  out.marks[index.map_face.back()] = 1;
  return out;
}

}  // namespace

FaceMarks Patch::outer_marks() const { return close_patch(*this).marks; }

CanonicalCode patch_code(const Patch& patch) {
  auto closed = close_patch(patch);
  return canonical_form(closed.map, closed.marks).code;
}

PatchStats patch_stats(const Patch& patch) {
  PatchStats s;
  s.f = static_cast<int>(patch.faces.size());
  auto w = boundary_word(patch);
  for (auto r : w) (r == kCorner ? s.v2 : s.v3) += 1;
  s.x = patch.num_vertices - static_cast<int>(patch.boundary.size());
  return s;
}

BoundaryWord boundary_word(const Patch& patch) {
  std::vector<std::set<int>> nbr(patch.num_vertices);
  for (const auto& f : patch.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      int u = f[i], v = f[(i + 1) % f.size()];
      nbr[u].insert(v);
      nbr[v].insert(u);
    }
  BoundaryWord w;
  w.reserve(patch.boundary.size());
  for (int v : patch.boundary) w.push_back(nbr[v].size() == 2 ? kCorner : kTail);
  return w;
}

BoundarySequence boundary_sequence(const Patch& patch) {
  return sequence_from_word(boundary_word(patch));
}

void validate_patch(const Patch& patch) {
  if (patch.faces.empty()) throw StructuralError("patch has no faces");
  for (const auto& f : patch.faces) {
    if (static_cast<int>(f.size()) != patch.p)
      throw StructuralError("patch face of size " + std::to_string(f.size()) + " != p");
    std::set<int> distinct(f.begin(), f.end());
    if (distinct.size() != f.size()) throw StructuralError("face boundary is not a simple cycle");
  }
  std::set<int> bset(patch.boundary.begin(), patch.boundary.end());
  if (bset.size() != patch.boundary.size() || patch.boundary.size() < 3)
    throw StructuralError("patch boundary is not a simple cycle");

  CombinatorialMap map = patch.to_map();
  if (!map.is_connected() || map.euler_characteristic() != 2)
    throw StructuralError("patch is not a disk");
  auto closed = close_patch(patch);
  for (int v = 0; v < closed.map.num_vertices(); ++v) {
    int id = closed.input_vertex[v];
    int deg = closed.map.degree(v);
    bool on_boundary = bset.count(id) > 0;
    if (on_boundary ? (deg < 2 || deg > 3) : deg != 3)
      throw StructuralError("vertex " + std::to_string(id) + " has degree " + std::to_string(deg));
  }
  if (closed.map.num_vertices() != patch.num_vertices)
    throw StructuralError("patch vertex count mismatch");

  auto s = patch_stats(patch);
  const int p = patch.p;
  if (2 * s.v2 - (p - 4) * s.v3 + (6 - p) * s.x != 2 * p)
    throw StructuralError("patch violates 2v2 - (p-4)v3 + (6-p)x = 2p");
  if (p * s.f != s.v2 + 2 * s.v3 + 3 * s.x)
    throw StructuralError("patch violates pf = v2 + 2v3 + 3x");
}

std::vector<int> AbstractGraph::degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool AbstractGraph::is_path() const {
  if (num_vertices == 1) return edges.empty();
  if (static_cast<int>(edges.size()) != num_vertices - 1) return false;
  auto deg = degrees();
  int ends = 0;
  for (int d : deg) {
    if (d == 0 || d > 2) return false;
    if (d == 1) ++ends;
  }
  if (ends != 2) return false;
  // n-1 edges and max degree 2 with two ends: a path iff connected.
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(num_vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == num_vertices;
}

AbstractGraph pgon_adjacency_graph(const Patch& patch) {
  AbstractGraph g;
  g.num_vertices = static_cast<int>(patch.faces.size());
  std::set<std::pair<int, int>> edges;
  std::vector<std::pair<std::pair<int, int>, int>> sides;
  for (int fi = 0; fi < g.num_vertices; ++fi) {
    const auto& f = patch.faces[fi];
    for (std::size_t i = 0; i < f.size(); ++i) {
      int u = f[i], v = f[(i + 1) % f.size()];
      sides.push_back({{std::min(u, v), std::max(u, v)}, fi});
    }
  }
  std::sort(sides.begin(), sides.end());
  for (std::size_t i = 0; i + 1 < sides.size(); ++i)
    if (sides[i].first == sides[i + 1].first) {
      int a = sides[i].second, b = sides[i + 1].second;
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::optional<EulerProfile> euler_profile(int p, const BoundaryWord& w) {
  int n = 0, k = 0;
  for (auto r : w) (r == kCorner ? n : k) += 1;
  EulerProfile out;
  if (p != 6) {
    const int num = 2 * p - 2 * n + (p - 4) * k;
    const int den = 6 - p;
    if (num % den != 0) return std::nullopt;
    out.x = num / den;
    if (out.x < 0) return std::nullopt;
    const int fnum = n + 2 * k + 3 * out.x;
    if (fnum % p != 0) return std::nullopt;
    out.f = fnum / p;
    if (out.f < 1) return std::nullopt;
    return out;
  }
  // Hexagons are flat: walk the boundary on the hexagonal lattice (corners
  // turn left, tails turn right) and read the face count off the enclosed
  // area, counted in units of one hexagon.
  if (n - k != 6) return std::nullopt;
  static constexpr int kStep[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  const int len = static_cast<int>(w.size());
  long long a = 0, b = 0, twice_area = 0;
  int dir = 0;
  for (int i = 0; i < len; ++i) {
    long long na = a + kStep[dir][0], nb = b + kStep[dir][1];
    twice_area += a * nb - na * b;
    a = na;
    b = nb;
    dir = (dir + (w[(i + 1) % len] == kCorner ? 1 : 5)) % 6;
  }
  if (a != 0 || b != 0) return std::nullopt;
  if (twice_area <= 0 || twice_area % 6 != 0) return std::nullopt;
  out.f = static_cast<int>(twice_area / 6);
  const int xnum = 6 * out.f - n - 2 * k;
  if (xnum < 0 || xnum % 3 != 0) return std::nullopt;
  out.x = xnum / 3;
  return out;
}

}  // namespace ringmap
