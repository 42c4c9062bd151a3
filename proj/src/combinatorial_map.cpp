#include "ringmap/combinatorial_map.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "ringmap/errors.hpp"

namespace ringmap {

std::string CanonicalCode::hex() const {
  bool wide = std::any_of(entries.begin(), entries.end(), [](auto e) { return e > 0xff; });
  std::string out;
  out.reserve(entries.size() * (wide ? 4 : 2));
  char buf[8];
  for (auto e : entries) {
    std::snprintf(buf, sizeof buf, wide ? "%04x" : "%02x", static_cast<unsigned>(e));
    out += buf;
  }
  return out;
}

CombinatorialMap::CombinatorialMap(std::vector<int> sigma, std::vector<int> alpha)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
  const int n = num_darts();
  if (static_cast<int>(alpha_.size()) != n || n % 2 != 0)
    throw StructuralError("sigma and alpha must have the same even length");
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    int a = alpha_[d];
    if (a < 0 || a >= n || a == d || alpha_[a] != d)
      throw StructuralError("alpha must be a fixed-point-free involution");
    int s = sigma_[d];
    if (s < 0 || s >= n || seen[s])
      throw StructuralError("sigma must be a permutation");
    seen[s] = 1;
  }
  build_orbits();
}

void CombinatorialMap::build_orbits() {
  const int n = num_darts();
  sigma_inv_.assign(n, 0);
  for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

  tail_.assign(n, -1);
  vertex_dart_.clear();
  for (int d = 0; d < n; ++d) {
    if (tail_[d] >= 0) continue;
    int v = static_cast<int>(vertex_dart_.size());
    vertex_dart_.push_back(d);
    int e = d;
    do {
      tail_[e] = v;
      e = sigma_[e];
    } while (e != d);
  }

  face_.assign(n, -1);
  face_dart_.clear();
  for (int d = 0; d < n; ++d) {
    if (face_[d] >= 0) continue;
    int f = static_cast<int>(face_dart_.size());
    face_dart_.push_back(d);
    int e = d;
    do {
      face_[e] = f;
      e = face_next(e);
    } while (e != d);
  }
}

CombinatorialMap CombinatorialMap::from_faces(const std::vector<std::vector<int>>& faces,
                                              FaceListIndex* index) {
  std::unordered_map<std::uint64_t, int> dart_of;
  auto key = [](int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  };
  int next_edge = 0;
  auto dart = [&](int u, int v) {
    if (auto it = dart_of.find(key(u, v)); it != dart_of.end()) return it->second;
    int e = next_edge++;
    dart_of.emplace(key(u, v), 2 * e);
    dart_of.emplace(key(v, u), 2 * e + 1);
    return 2 * e;
  };

  for (const auto& f : faces) {
    if (f.size() < 2) throw StructuralError("face with fewer than two vertices");
    for (std::size_t i = 0; i < f.size(); ++i) {
      int u = f[i], v = f[(i + 1) % f.size()];
      if (u == v) throw StructuralError("loop edge in face list");
      dart(u, v);
    }
  }

  const int n = 2 * next_edge;
  std::vector<int> sigma(n, -1), alpha(n);
  std::vector<char> used(n, 0);
  for (int d = 0; d < n; ++d) alpha[d] = d ^ 1;
  for (const auto& f : faces) {
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      int d = dart_of.at(key(f[i], f[(i + 1) % m]));
      if (used[d]) throw StructuralError("directed edge appears in two faces");
      used[d] = 1;
      int next = dart_of.at(key(f[(i + 1) % m], f[(i + 2) % m]));
      if (sigma[next] != -1) throw StructuralError("inconsistent face orientation");
      sigma[next] = alpha[d];
    }
  }
  for (int d = 0; d < n; ++d)
    if (!used[d] || sigma[d] < 0) throw StructuralError("face list does not close every edge");

  CombinatorialMap map(std::move(sigma), std::move(alpha));
  // Each input vertex must be a single rotation orbit (no pinched vertices).
  std::unordered_map<int, int> orbit_of;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      int d = dart_of.at(key(f[i], f[(i + 1) % f.size()]));
      auto [it, fresh] = orbit_of.emplace(f[i], map.tail(d));
      if (!fresh && it->second != map.tail(d))
        throw StructuralError("vertex splits into several rotation orbits");
    }
  if (index) {
    index->vertex_id.assign(map.num_vertices(), -1);
    for (auto [id, v] : orbit_of) index->vertex_id[v] = id;
    index->map_face.clear();
    for (const auto& f : faces)
      index->map_face.push_back(map.face_of(dart_of.at(key(f[0], f[1]))));
  }
  return map;
}

int CombinatorialMap::degree(int v) const {
  int d0 = vertex_dart_[v], d = d0, k = 0;
  do {
    ++k;
    d = sigma_[d];
  } while (d != d0);
  return k;
}

int CombinatorialMap::face_size(int f) const {
  int d0 = face_dart_[f], d = d0, k = 0;
  do {
    ++k;
    d = face_next(d);
  } while (d != d0);
  return k;
}

std::vector<int> CombinatorialMap::face_darts(int f) const {
  std::vector<int> out;
  int d0 = face_dart_[f], d = d0;
  do {
    out.push_back(d);
    d = face_next(d);
  } while (d != d0);
  return out;
}

std::vector<int> CombinatorialMap::face_vertices(int f) const {
  auto darts = face_darts(f);
  std::vector<int> out;
  out.reserve(darts.size());
  for (int d : darts) out.push_back(tail_[d]);
  return out;
}

std::vector<int> CombinatorialMap::neighbors(int v) const {
  std::vector<int> out;
  int d0 = vertex_dart_[v], d = d0;
  do {
    out.push_back(head(d));
    d = sigma_[d];
  } while (d != d0);
  return out;
}

bool CombinatorialMap::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == num_vertices();
}

bool CombinatorialMap::is_cubic() const {
  for (int v = 0; v < num_vertices(); ++v)
    if (degree(v) != 3) return false;
  return true;
}

CombinatorialMap CombinatorialMap::relabeled(const std::vector<int>& perm) const {
  const int n = num_darts();
  std::vector<int> s(n), a(n);
  for (int d = 0; d < n; ++d) {
    s[perm[d]] = perm[sigma_[d]];
    a[perm[d]] = perm[alpha_[d]];
  }
  return CombinatorialMap(std::move(s), std::move(a));
}

CombinatorialMap CombinatorialMap::mirrored() const {
  return CombinatorialMap(sigma_inv_, alpha_);
}

void require_cubic(const CombinatorialMap& map) {
  if (!map.is_connected()) throw StructuralError("map is not connected");
  if (!map.is_cubic()) throw StructuralError("map is not 3-valent");
}

namespace {

// Breadth-first traversal from `root`. When `best` is non-null the traversal
// stops as soon as the partial code exceeds it. Returns <0, 0, >0 relative to
// *best (or -1 when best is null).
int traverse(const CombinatorialMap& map, int root, bool reversed, const FaceMarks& marks,
             bool cubic, const std::vector<std::uint16_t>* best,
             std::vector<std::uint16_t>& out, std::vector<int>& number,
             std::vector<int>& queue) {
  out.clear();
  std::fill(number.begin(), number.end(), 0);
  queue.clear();
  int cmp = best ? 0 : -1;
  auto emit = [&](std::uint16_t value) -> bool {
    std::size_t i = out.size();
    out.push_back(value);
    if (cmp == 0) {
      if (i >= best->size() || value > (*best)[i]) {
        cmp = 1;
        return false;
      }
      if (value < (*best)[i]) cmp = -1;
    }
    return true;
  };

  int next = 1;
  number[map.tail(root)] = next++;
  queue.push_back(root);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int d0 = queue[qi];
    int d = d0;
    do {
      int w = map.head(d);
      if (number[w] == 0) {
        number[w] = next++;
        queue.push_back(map.alpha(d));
      }
      if (!emit(static_cast<std::uint16_t>(number[w]))) return 1;
      if (!marks.empty()) {
        int f = reversed ? map.face_of(map.alpha(d)) : map.face_of(d);
        if (!emit(marks[f])) return 1;
      }
      d = reversed ? map.sigma_inv(d) : map.sigma(d);
    } while (d != d0);
    if (!cubic && !emit(0)) return 1;
  }
  if (cmp == 0 && out.size() < best->size()) cmp = -1;
  return cmp;
}

void check_marks(const CombinatorialMap& map, const FaceMarks& marks) {
  if (!marks.empty() && static_cast<int>(marks.size()) != map.num_faces())
    throw StructuralError("face mark count does not match face count");
}

}  // namespace

CanonicalCode rooted_code(const CombinatorialMap& map, int root, bool reversed,
                          const FaceMarks& marks) {
  check_marks(map, marks);
  std::vector<std::uint16_t> out;
  std::vector<int> number(map.num_vertices()), queue;
  traverse(map, root, reversed, marks, map.is_cubic(), nullptr, out, number, queue);
  return CanonicalCode{std::move(out)};
}

CanonicalForm canonical_form(const CombinatorialMap& map, const FaceMarks& marks) {
  if (map.num_darts() == 0) throw StructuralError("empty map");
  if (!map.is_connected()) throw StructuralError("map is not connected");
  check_marks(map, marks);
  const bool cubic = map.is_cubic();

  CanonicalForm form;
  std::vector<std::uint16_t> best, scratch;
  std::vector<int> number(map.num_vertices()), queue;
  bool have_best = false;
  for (int root = 0; root < map.num_darts(); ++root) {
    for (int r = 0; r < 2; ++r) {
      int cmp = traverse(map, root, r == 1, marks, cubic, have_best ? &best : nullptr,
                         scratch, number, queue);
      if (cmp < 0) {
        best.swap(scratch);
        have_best = true;
        form.aut_order = 1;
        form.root = root;
        form.reversed = r == 1;
      } else if (cmp == 0) {
        ++form.aut_order;
      }
    }
  }
  form.code.entries = std::move(best);
  traverse(map, form.root, form.reversed, marks, cubic, nullptr, scratch, number, queue);
  form.vertex_label.resize(map.num_vertices());
  for (int v = 0; v < map.num_vertices(); ++v) form.vertex_label[v] = number[v] - 1;
  return form;
}

CanonicalCode canonical_code(const CombinatorialMap& map, const FaceMarks& marks) {
  require_cubic(map);
  return canonical_form(map, marks).code;
}

int aut_order(const CombinatorialMap& map, const FaceMarks& marks) {
  require_cubic(map);
  return canonical_form(map, marks).aut_order;
}

bool is_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices() ||
      a.num_faces() != b.num_faces())
    return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace ringmap
