#include "ringmap/assembler.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringmap/errors.hpp"
#include "ringmap/paramdomain.hpp"
#include "ringmap/patchfill.hpp"

namespace ringmap {

RingComplex make_ring(const RingLayout& layout) {
  const int n = layout.n;
  const int d = layout.q - 4;
  if (n < 2) throw ParameterError("a ring needs n >= 2");
  if (static_cast<int>(layout.j.size()) != n) throw ParameterError("layout size != n");
  for (int v : layout.j)
    if (v < 0 || v > d) throw ParameterError("layout entry outside [0, q-4]");

  RingComplex r;
  r.layout = layout;
  int next = 0;
  r.inner_tails.resize(n);
  r.outer_tails.resize(n);
  for (int i = 0; i < n; ++i) {
    r.inner_corner.push_back(next++);
    for (int t = 0; t < layout.j[i]; ++t) r.inner_tails[i].push_back(next++);
  }
  for (int i = 0; i < n; ++i) {
    r.outer_corner.push_back(next++);
    for (int t = 0; t < d - layout.j[i]; ++t) r.outer_tails[i].push_back(next++);
  }
  r.num_vertices = next;
  for (int i = 0; i < n; ++i) {
    r.inner_cycle.push_back(r.inner_corner[i]);
    r.inner_cycle.insert(r.inner_cycle.end(), r.inner_tails[i].begin(), r.inner_tails[i].end());
    r.outer_cycle.push_back(r.outer_corner[i]);
    r.outer_cycle.insert(r.outer_cycle.end(), r.outer_tails[i].begin(), r.outer_tails[i].end());
  }
  std::reverse(r.outer_cycle.begin(), r.outer_cycle.end());
  for (int i = 0; i < n; ++i) {
    const int i1 = (i + 1) % n;
    std::vector<int> f{r.inner_corner[i1]};
    f.insert(f.end(), r.inner_tails[i].rbegin(), r.inner_tails[i].rend());
    f.push_back(r.inner_corner[i]);
    f.push_back(r.outer_corner[i]);
    f.insert(f.end(), r.outer_tails[i].begin(), r.outer_tails[i].end());
    f.push_back(r.outer_corner[i1]);
    r.faces.push_back(std::move(f));
  }
  return r;
}

FaceMarks AssembledMap::ring_marks() const {
  FaceMarks marks(map.num_faces(), 0);
  for (int f : ring) marks[f] = 1;
  return marks;
}

namespace {

void append_patch(std::vector<std::vector<int>>& faces, const Patch& patch,
                  const std::vector<int>& cycle, int& next_id) {
  std::vector<int> id(patch.num_vertices, -1);
  for (std::size_t i = 0; i < cycle.size(); ++i) id[patch.boundary[i]] = cycle[i];
  for (auto& v : id)
    if (v < 0) v = next_id++;
  for (const auto& f : patch.faces) {
    std::vector<int> mapped;
    mapped.reserve(f.size());
    for (int v : f) mapped.push_back(id[v]);
    faces.push_back(std::move(mapped));
  }
}

Patch mirror(const Patch& patch) {
  Patch m = patch;
  for (auto& f : m.faces) std::reverse(f.begin(), f.end());
  std::reverse(m.boundary.begin(), m.boundary.end());
  return m;
}

// Rotations and reflections of `patch` whose boundary roles read `want`.
std::vector<Patch> alignments(const Patch& patch, const BoundaryWord& want) {
  std::vector<Patch> out;
  const int L = static_cast<int>(want.size());
  if (static_cast<int>(patch.boundary.size()) != L) return out;
  for (int m = 0; m < 2; ++m) {
    Patch base = m == 0 ? patch : mirror(patch);
    auto word = boundary_word(base);
    for (int r = 0; r < L; ++r) {
      bool match = true;
      for (int i = 0; i < L && match; ++i) match = word[(r + i) % L] == want[i];
      if (!match) continue;
      Patch rotated = base;
      std::rotate(rotated.boundary.begin(), rotated.boundary.begin() + r, rotated.boundary.end());
      out.push_back(std::move(rotated));
    }
  }
  return out;
}

}  // namespace

AssembledMap glue(const RingComplex& ring, const Patch& inner, const Patch& outer) {
  if (inner.boundary.size() != ring.inner_cycle.size() ||
      outer.boundary.size() != ring.outer_cycle.size())
    throw GlueMismatch("patch boundary length does not match the ring");
  if (boundary_word(inner) != ring.layout.inner_word())
    throw GlueMismatch("inner patch boundary roles do not match the ring");
  if (boundary_word(outer) != ring.layout.outer_word())
    throw GlueMismatch("outer patch boundary roles do not match the ring");

  std::vector<std::vector<int>> faces = ring.faces;
  int next_id = ring.num_vertices;
  append_patch(faces, inner, ring.inner_cycle, next_id);
  append_patch(faces, outer, ring.outer_cycle, next_id);

  CombinatorialMap::FaceListIndex index;
  AssembledMap out{CombinatorialMap::from_faces(faces, &index), {}};
  for (std::size_t i = 0; i < ring.faces.size(); ++i) out.ring.push_back(index.map_face[i]);
  if (!out.map.is_cubic() || out.map.euler_characteristic() != 2)
    throw StructuralError("glued map is not a 3-valent sphere");
  return out;
}

std::vector<AssembledMap> assemble(const Patch& inner, const Patch& outer, int q) {
  const BoundarySequence a = boundary_sequence(inner);
  const BoundarySequence b = boundary_sequence(outer);
  if (a.sum() != b.sum()) throw GlueMismatch("patches bound rings of different length");
  BoundarySequence expected;
  try {
    expected = q_complement(a, q);
  } catch (const ComplementUndefined& e) {
    throw GlueMismatch(std::string("inner sequence has no complement: ") + e.what());
  }
  if (canonical_seq(b) != expected)
    throw GlueMismatch("outer sequence " + b.to_string() + " is not the " + std::to_string(q) +
                       "-complement of " + a.to_string());

  const RingComplex ring = make_ring(layout_from_sequence(a, q));
  const auto ins = alignments(inner, ring.layout.inner_word());
  const auto outs = alignments(outer, ring.layout.outer_word());
  std::map<CanonicalCode, AssembledMap> unique;
  for (const auto& pi : ins)
    for (const auto& po : outs) {
      auto m = glue(ring, pi, po);
      auto code = canonical_form(m.map, m.ring_marks()).code;
      unique.emplace(std::move(code), std::move(m));
    }
  std::vector<AssembledMap> out;
  for (auto& [code, m] : unique) out.push_back(std::move(m));
  return out;
}

Patch RingSide::patch(const CombinatorialMap& map) const {
  Patch out;
  std::map<int, int> dense;
  auto id = [&](int v) {
    auto [it, fresh] = dense.emplace(v, static_cast<int>(dense.size()));
    return it->second;
  };
  for (int v : cycle) out.boundary.push_back(id(v));
  for (int f : faces) {
    std::vector<int> vs;
    for (int v : map.face_vertices(f)) vs.push_back(id(v));
    out.faces.push_back(std::move(vs));
  }
  out.num_vertices = static_cast<int>(dense.size());
  out.p = out.faces.empty() ? 0 : static_cast<int>(out.faces[0].size());
  return out;
}

RingInfo analyze_ring(const CombinatorialMap& map, std::vector<int> faces) {
  const int n = static_cast<int>(faces.size());
  if (n < 2) throw NotARing("a ring needs at least two faces");
  std::vector<int> pos(map.num_faces(), -1);
  for (int i = 0; i < n; ++i) {
    if (faces[i] < 0 || faces[i] >= map.num_faces()) throw NotARing("face id out of range");
    if (pos[faces[i]] >= 0) throw NotARing("face repeated in ring");
    pos[faces[i]] = i;
  }

  std::map<std::pair<int, int>, int> shared;
  for (int i = 0; i < n; ++i)
    for (int d : map.face_darts(faces[i])) {
      int g = pos[map.face_of(map.alpha(d))];
      if (g < 0) continue;
      if (g == i) throw NotARing("ring face meets itself along an edge");
      ++shared[{i, g}];
    }
  for (auto [key, count] : shared) {
    auto [i, g] = key;
    bool consecutive = (g == (i + 1) % n) || (i == (g + 1) % n);
    if (!consecutive) throw NotARing("non-consecutive ring faces are adjacent (dual chord)");
    if (n >= 3 && count != 1) throw NotARing("consecutive ring faces share more than one edge");
  }
  for (int i = 0; i < n; ++i) {
    int g = (i + 1) % n;
    auto it = shared.find({i, g});
    int count = it == shared.end() ? 0 : it->second;
    if (n == 2 ? count != 2 : count != 1)
      throw NotARing("consecutive ring faces " + std::to_string(i) + "," + std::to_string(g) +
                     " do not share the required edge");
  }

  std::vector<int> ring_count(map.num_vertices(), 0);
  for (int f : faces)
    for (int v : map.face_vertices(f)) ++ring_count[v];
  for (int v = 0; v < map.num_vertices(); ++v)
    if (ring_count[v] > 2) throw NotARing("spokes are not vertex-disjoint");

  std::vector<int> out_dart(map.num_vertices(), -1);
  std::vector<int> boundary_darts;
  for (int f : faces)
    for (int d : map.face_darts(f)) {
      int e = map.alpha(d);
      if (pos[map.face_of(e)] >= 0) continue;
      if (out_dart[map.tail(e)] >= 0) throw NotARing("ring boundary is not a simple cycle");
      out_dart[map.tail(e)] = e;
      boundary_darts.push_back(e);
    }

  RingInfo info;
  info.faces = faces;
  std::vector<char> used(map.num_darts(), 0);
  int sides = 0;
  std::vector<int> side_of_face(map.num_faces(), -1);
  for (int e0 : boundary_darts) {
    if (used[e0]) continue;
    if (sides == 2) throw NotARing("ring boundary has more than two components");
    RingSide& side = info.sides[sides];
    int e = e0;
    do {
      used[e] = 1;
      side.cycle.push_back(map.tail(e));
      side.word.push_back(ring_count[map.tail(e)] == 2 ? kCorner : kTail);
      e = out_dart[map.head(e)];
      if (e < 0) throw NotARing("ring boundary is not closed");
    } while (e != e0);
    // Flood the domain from the faces along this boundary.
    std::vector<int> stack;
    e = e0;
    do {
      int f = map.face_of(e);
      if (side_of_face[f] == -1) {
        side_of_face[f] = sides;
        stack.push_back(f);
      } else if (side_of_face[f] != sides) {
        throw NotARing("ring does not separate the sphere");
      }
      e = out_dart[map.head(e)];
    } while (e != e0);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      side.faces.push_back(f);
      for (int d : map.face_darts(f)) {
        int g = map.face_of(map.alpha(d));
        if (pos[g] >= 0) continue;
        if (side_of_face[g] == -1) {
          side_of_face[g] = sides;
          stack.push_back(g);
        } else if (side_of_face[g] != sides) {
          throw NotARing("ring does not separate the sphere");
        }
      }
    }
    std::sort(side.faces.begin(), side.faces.end());
    side.sequence = sequence_from_word(side.word);
    std::set<int> on_cycle(side.cycle.begin(), side.cycle.end()), seen;
    for (int f : side.faces)
      for (int v : map.face_vertices(f))
        if (!on_cycle.count(v)) seen.insert(v);
    side.interior_vertices = static_cast<int>(seen.size());
    ++sides;
  }
  if (sides != 2) throw NotARing("ring does not bound two domains");
  for (int f = 0; f < map.num_faces(); ++f)
    if (pos[f] < 0 && side_of_face[f] < 0) throw NotARing("face not reached from the ring");
  return info;
}

RingInfo ring_of(const CombinatorialMap& map, int q) {
  std::vector<int> qfaces;
  for (int f = 0; f < map.num_faces(); ++f)
    if (map.face_size(f) == q) qfaces.push_back(f);
  if (qfaces.size() < 2) throw NotARing("fewer than two " + std::to_string(q) + "-gons");
  std::set<int> qset(qfaces.begin(), qfaces.end());
  auto q_neighbors = [&](int f) {
    std::set<int> out;
    for (int d : map.face_darts(f)) {
      int g = map.face_of(map.alpha(d));
      if (g != f && qset.count(g)) out.insert(g);
    }
    return out;
  };
  if (qfaces.size() == 2) return analyze_ring(map, qfaces);
  std::vector<int> order{qfaces[0]};
  int prev = -1, cur = qfaces[0];
  while (true) {
    auto nb = q_neighbors(cur);
    if (nb.size() != 2)
      throw NotARing("a " + std::to_string(q) + "-gon has " + std::to_string(nb.size()) +
                     " neighbours of the same size");
    int next = *nb.begin() == prev ? *nb.rbegin() : *nb.begin();
    if (prev == -1) next = *nb.begin();
    if (next == qfaces[0]) break;
    if (std::find(order.begin(), order.end(), next) != order.end())
      throw NotARing("q-gon adjacency is not a single cycle");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != qfaces.size()) throw NotARing("q-gons form more than one cycle");
  return analyze_ring(map, order);
}

std::vector<RingInfo> find_rings(const CombinatorialMap& map, int p, int q, int n) {
  std::vector<int> cand;
  for (int f = 0; f < map.num_faces(); ++f)
    if (map.face_size(f) == q) cand.push_back(f);
  const int F = map.num_faces();
  std::vector<std::set<int>> adj(F);
  for (int f = 0; f < F; ++f)
    for (int d : map.face_darts(f)) adj[f].insert(map.face_of(map.alpha(d)));
  std::vector<char> is_cand(F, 0);
  for (int f : cand) is_cand[f] = 1;

  std::vector<RingInfo> out;
  std::vector<int> path;
  std::vector<char> in_path(F, 0);
  auto accept = [&]() {
    if (path.size() > 2 && path[1] > path.back()) return;  // each cycle once
    try {
      auto info = analyze_ring(map, path);
      for (int f = 0; f < F; ++f)
        if (!in_path[f] && map.face_size(f) != p) return;
      out.push_back(std::move(info));
    } catch (const NotARing&) {
    }
  };
  auto dfs = [&](auto&& self) -> void {
    const int len = static_cast<int>(path.size());
    if (len == n) {
      if (n == 2 || adj[path.back()].count(path[0])) accept();
      return;
    }
    for (int g : adj[path.back()]) {
      if (!is_cand[g] || in_path[g] || g < path[0]) continue;
      // Induced: g may touch only its predecessor (and the start when closing).
      bool chord = false;
      for (int i = 1; i + 1 < len && !chord; ++i) chord = adj[g].count(path[i]) > 0;
      if (chord) continue;
      if (len + 1 < n && len >= 2 && adj[g].count(path[0])) continue;
      path.push_back(g);
      in_path[g] = 1;
      self(self);
      in_path[g] = 0;
      path.pop_back();
    }
  };
  for (int f : cand) {
    path = {f};
    in_path[f] = 1;
    dfs(dfs);
    in_path[f] = 0;
  }
  return out;
}

EulerReport euler_check(const CombinatorialMap& map, int p, int q, int n,
                        const std::vector<int>& ring) {
  EulerReport r;
  const int V = map.num_vertices(), E = map.num_edges(), F = map.num_faces();
  if (3 * V != 2 * E) r.failures.push_back("3V != 2E");
  if (V - E + F != 2) r.failures.push_back("V - E + F != 2");
  int q_faces = 0;
  for (int f = 0; f < F; ++f) {
    int s = map.face_size(f);
    if (s != p && s != q) {
      r.failures.push_back("face of size " + std::to_string(s));
      break;
    }
    if (s == q) ++q_faces;
  }
  if (p != q && q_faces != n)
    r.failures.push_back(std::to_string(q_faces) + " q-gons, expected " + std::to_string(n));
  if (!ring.empty() && static_cast<int>(ring.size()) != n)
    r.failures.push_back("ring length " + std::to_string(ring.size()) + " != n");

  int on_ring = (q - 2) * n;
  if (!ring.empty()) {
    std::set<int> vs;
    for (int f : ring)
      for (int v : map.face_vertices(f)) vs.insert(v);
    on_ring = static_cast<int>(vs.size());
  }
  r.excess = V - on_ring;
  if (p != 6 && euler_ring_residual(p, q, n, r.excess) != 0)
    r.failures.push_back("x+x' = " + std::to_string(r.excess) + " violates the ring relation");
  return r;
}

AssembledMap prism(int p) {
  if (p < 3) throw ParameterError("prism needs p >= 3");
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < p; ++i) {
    int i1 = (i + 1) % p;
    faces.push_back({i1, i, p + i, p + i1});
  }
  faces.emplace_back();
  for (int i = 0; i < p; ++i) faces.back().push_back(i);
  faces.emplace_back();
  for (int i = 2 * p - 1; i >= p; --i) faces.back().push_back(i);
  CombinatorialMap::FaceListIndex index;
  AssembledMap out{CombinatorialMap::from_faces(faces, &index), {}};
  for (int i = 0; i < p; ++i) out.ring.push_back(index.map_face[i]);
  return out;
}

AssembledMap decorate_prism(int q) {
  if (q < 4) throw ParameterError("decorate_prism needs q >= 4");
  const int m = q - 4;
  std::vector<int> a, b;  // new vertices on the lateral edges 0-q and 1-(q+1)
  int next = 2 * q;
  for (int t = 0; t < m; ++t) a.push_back(next++);
  for (int t = 0; t < m; ++t) b.push_back(next++);

  std::vector<std::vector<int>> faces;
  std::vector<int> top, bottom;
  for (int i = 0; i < q; ++i) top.push_back(i);
  for (int i = 2 * q - 1; i >= q; --i) bottom.push_back(i);
  // The stack of q-3 quadrangles replacing the square [1, 0, q, q+1].
  std::vector<int> left{0}, right{1};
  left.insert(left.end(), a.begin(), a.end());
  right.insert(right.end(), b.begin(), b.end());
  left.push_back(q);
  right.push_back(q + 1);
  std::vector<std::vector<int>> stack;
  for (int t = 0; t + 1 < static_cast<int>(left.size()); ++t)
    stack.push_back({right[t], left[t], left[t + 1], right[t + 1]});
  // Neighbouring squares absorb the new vertices and become q-gons.
  std::vector<int> A{0, q - 1, 2 * q - 1, q};
  A.insert(A.end(), a.rbegin(), a.rend());
  std::vector<int> B{2, 1};
  B.insert(B.end(), b.begin(), b.end());
  B.push_back(q + 1);
  B.push_back(q + 2);
  faces.push_back(top);
  faces.push_back(A);
  faces.push_back(bottom);
  faces.push_back(B);
  for (auto& s : stack) faces.push_back(s);
  for (int i = 2; i < q - 1; ++i) {
    int i1 = (i + 1) % q;
    faces.push_back({i1, i, q + i, q + i1});
  }
  CombinatorialMap::FaceListIndex index;
  AssembledMap out{CombinatorialMap::from_faces(faces, &index), {}};
  for (int i = 0; i < 4; ++i) out.ring.push_back(index.map_face[i]);
  return out;
}

BoundarySequence fulleroid_sequence(int t, FulleroidVariant variant) {
  if (t < 1) throw ParameterError("fulleroid_M45 needs t >= 1");
  std::vector<int> b;
  if (variant == FulleroidVariant::Q5t3) {
    b.push_back(2);
    b.insert(b.end(), 5 * t - 2, 0);
  } else {
    b = {1, 1};
    b.insert(b.end(), 5 * t - 4, 0);
  }
  std::vector<int> bb = b;
  bb.insert(bb.end(), b.begin(), b.end());
  return BoundarySequence(bb);
}

AssembledMap fulleroid_M45(int t, FulleroidVariant variant) {
  const int q = variant == FulleroidVariant::Q5t3 ? 5 * t + 3 : 5 * t + 2;
  const BoundarySequence a = fulleroid_sequence(t, variant);
  const RingComplex ring = make_ring(layout_from_sequence(a, q));
  Filler filler(5);
  auto inner = filler.find_one(ring.layout.inner_word());
  auto outer = filler.find_one(ring.layout.outer_word());
  if (!inner || !outer) throw StructuralError("fulleroid sequence is not pentagonal");
  return glue(ring, *inner, *outer);
}

}  // namespace ringmap
