#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ringmap/errors.hpp"

namespace oracle {

using ringmap::BoundaryWord;
using ringmap::kCorner;
using ringmap::kTail;

int brute_aut_count(const CombinatorialMap& map, const FaceMarks& marks) {
  const int nd = map.num_darts();
  int count = 0;
  for (int target = 0; target < nd; ++target)
    for (int orient = 0; orient < 2; ++orient) {
      std::vector<int> phi(nd, -1), inv(nd, -1);
      std::vector<int> todo{0};
      phi[0] = target;
      inv[target] = 0;
      bool ok = true;
      auto assign = [&](int d, int img) {
        if (phi[d] == -1) {
          if (inv[img] != -1) return false;
          phi[d] = img;
          inv[img] = d;
          todo.push_back(d);
          return true;
        }
        return phi[d] == img;
      };
      while (ok && !todo.empty()) {
        int d = todo.back();
        todo.pop_back();
        int img = phi[d];
        ok = assign(map.alpha(d), map.alpha(img)) &&
             assign(map.sigma(d), orient == 0 ? map.sigma(img) : map.sigma_inv(img));
        if (ok && !marks.empty()) {
          int f_img = orient == 0 ? map.face_of(img) : map.face_of(map.alpha(img));
          ok = marks[map.face_of(d)] == marks[f_img];
        }
      }
      if (ok && std::find(phi.begin(), phi.end(), -1) == phi.end()) ++count;
    }
  return count;
}

namespace {

std::vector<int> naive_min(const std::vector<int>& a) {
  const int k = static_cast<int>(a.size());
  std::vector<std::vector<int>> variants;
  for (int r = 0; r < k; ++r) {
    std::vector<int> rot, rev;
    for (int i = 0; i < k; ++i) rot.push_back(a[(r + i) % k]);
    rev.assign(rot.rbegin(), rot.rend());
    variants.push_back(rot);
    variants.push_back(rev);
  }
  return *std::min_element(variants.begin(), variants.end());
}

void compositions(int k, int n, int max_entry, std::vector<int>& cur,
                  std::set<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    if (n == 0) out.insert(naive_min(cur));
    return;
  }
  for (int v = 0; v <= std::min(n, max_entry); ++v) {
    cur.push_back(v);
    compositions(k, n - v, max_entry, cur, out);
    cur.pop_back();
  }
}

BoundaryWord explicit_word(const Patch& patch) {
  std::vector<std::set<int>> nbr(patch.num_vertices);
  for (const auto& f : patch.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      nbr[f[i]].insert(f[(i + 1) % f.size()]);
      nbr[f[(i + 1) % f.size()]].insert(f[i]);
    }
  BoundaryWord w;
  for (int v : patch.boundary) w.push_back(nbr[v].size() == 2 ? kCorner : kTail);
  return w;
}

bool adjacent(const Patch& patch, int u, int v) {
  for (const auto& f : patch.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
  return false;
}

Patch mirror(const Patch& patch) {
  Patch m = patch;
  for (auto& f : m.faces) std::reverse(f.begin(), f.end());
  std::reverse(m.boundary.begin(), m.boundary.end());
  return m;
}

}  // namespace

std::set<std::vector<int>> naive_bracelets(int k, int n, int max_entry) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  compositions(k, n, max_entry, cur, out);
  return out;
}

std::vector<Patch> patch_pool(int p, int f_max) {
  Patch first;
  first.p = p;
  first.num_vertices = p;
  first.faces.emplace_back(p);
  std::iota(first.faces[0].begin(), first.faces[0].end(), 0);
  first.boundary = first.faces[0];

  std::vector<Patch> pool{first};
  std::vector<Patch> layer{first};
  for (int f = 2; f <= f_max && !layer.empty(); ++f) {
    std::map<ringmap::CanonicalCode, Patch> next;
    for (const auto& patch : layer) {
      const auto word = explicit_word(patch);
      const int L = static_cast<int>(patch.boundary.size());
      for (int s = 0; s < L; ++s) {
        if (word[s] != kCorner) continue;
        for (int len = 1; len <= p - 1 && len + 1 <= L; ++len) {
          bool run_ok = true;
          for (int t = 1; t < len; ++t) run_ok = run_ok && word[(s + t) % L] == kTail;
          if (!run_ok) break;
          if (word[(s + len) % L] != kCorner) continue;
          const int fresh = p - len - 1;
          const int u = patch.boundary[s], v = patch.boundary[(s + len) % L];
          if (L - len - 1 + 2 + fresh < 3) continue;
          if (fresh == 0 && adjacent(patch, u, v)) continue;
          Patch g = patch;
          std::vector<int> face{v};
          for (int t = len - 1; t >= 1; --t) face.push_back(patch.boundary[(s + t) % L]);
          face.push_back(u);
          std::vector<int> ws;
          for (int t = 0; t < fresh; ++t) ws.push_back(g.num_vertices++);
          face.insert(face.end(), ws.begin(), ws.end());
          g.faces.push_back(face);
          g.boundary = {u};
          g.boundary.insert(g.boundary.end(), ws.begin(), ws.end());
          g.boundary.push_back(v);
          for (int t = len + 1; t < L; ++t) g.boundary.push_back(patch.boundary[(s + t) % L]);
          next.emplace(ringmap::patch_code(g), std::move(g));
        }
      }
    }
    layer.clear();
    for (auto& [code, patch] : next) {
      pool.push_back(patch);
      layer.push_back(std::move(patch));
    }
  }
  return pool;
}

std::set<SeqKey> pool_sequences(const std::vector<Patch>& pool) {
  std::set<SeqKey> out;
  for (const auto& patch : pool) {
    auto w = explicit_word(patch);
    SeqKey key;
    key.n = static_cast<int>(std::count(w.begin(), w.end(), kCorner));
    auto first = std::find(w.begin(), w.end(), kTail);
    if (first != w.end()) {
      std::rotate(w.begin(), first, w.end());
      int run = 0;
      for (std::size_t i = 1; i <= w.size(); ++i) {
        if (i == w.size() || w[i] == kTail) {
          key.entries.push_back(run);
          run = 0;
        } else {
          ++run;
        }
      }
      key.entries = naive_min(key.entries);
    }
    out.insert(key);
  }
  return out;
}

namespace {

// Labelled fillings of the cycle `cycle` (domain on the left) with role word
// `roles`: every rotation of every pool patch and of its mirror image.
std::vector<std::vector<std::vector<int>>> fillings_of(const std::vector<Patch>& pool,
                                                       const std::vector<int>& cycle,
                                                       const BoundaryWord& roles, int& next_id) {
  std::vector<std::vector<std::vector<int>>> out;
  const int L = static_cast<int>(cycle.size());
  for (const auto& base : pool) {
    if (static_cast<int>(base.boundary.size()) != L) continue;
    for (int m = 0; m < 2; ++m) {
      Patch patch = m == 0 ? base : mirror(base);
      auto word = explicit_word(patch);
      for (int r = 0; r < L; ++r) {
        bool match = true;
        for (int i = 0; i < L && match; ++i) match = word[(r + i) % L] == roles[i];
        if (!match) continue;
        std::vector<int> id(patch.num_vertices, -1);
        for (int i = 0; i < L; ++i) id[patch.boundary[(r + i) % L]] = cycle[i];
        for (auto& v : id)
          if (v == -1) v = next_id++;
        std::vector<std::vector<int>> faces;
        for (const auto& f : patch.faces) {
          faces.emplace_back();
          for (int v : f) faces.back().push_back(id[v]);
        }
        out.push_back(std::move(faces));
      }
    }
  }
  return out;
}

}  // namespace

std::set<std::string> brute_ring_maps(int p, int q, int n, int f_max) {
  const auto pool = patch_pool(p, f_max);
  std::set<std::string> codes;
  const int d = q - 4;
  std::vector<int> j(n, 0);
  while (true) {
    int next_id = 0;
    std::vector<int> c(n), o(n);
    std::vector<std::vector<int>> s(n), u(n);
    for (int i = 0; i < n; ++i) {
      c[i] = next_id++;
      for (int t = 0; t < j[i]; ++t) s[i].push_back(next_id++);
    }
    for (int i = 0; i < n; ++i) {
      o[i] = next_id++;
      for (int t = 0; t < d - j[i]; ++t) u[i].push_back(next_id++);
    }
    std::vector<int> inner, outer;
    BoundaryWord inner_roles, outer_roles;
    for (int i = 0; i < n; ++i) {
      inner.push_back(c[i]);
      inner_roles.push_back(kCorner);
      for (int v : s[i]) {
        inner.push_back(v);
        inner_roles.push_back(kTail);
      }
      outer.push_back(o[i]);
      outer_roles.push_back(kCorner);
      for (int v : u[i]) {
        outer.push_back(v);
        outer_roles.push_back(kTail);
      }
    }
    std::reverse(outer.begin(), outer.end());
    std::reverse(outer_roles.begin(), outer_roles.end());

    std::vector<std::vector<int>> ring;
    for (int i = 0; i < n; ++i) {
      int i1 = (i + 1) % n;
      std::vector<int> f{c[i1]};
      f.insert(f.end(), s[i].rbegin(), s[i].rend());
      f.push_back(c[i]);
      f.push_back(o[i]);
      f.insert(f.end(), u[i].begin(), u[i].end());
      f.push_back(o[i1]);
      ring.push_back(std::move(f));
    }

    int id_in = next_id;
    auto ins = fillings_of(pool, inner, inner_roles, id_in);
    int id_out = id_in;
    auto outs = fillings_of(pool, outer, outer_roles, id_out);
    for (const auto& fi : ins)
      for (const auto& fo : outs) {
        auto faces = ring;
        faces.insert(faces.end(), fi.begin(), fi.end());
        faces.insert(faces.end(), fo.begin(), fo.end());
        try {
          ringmap::CombinatorialMap::FaceListIndex index;
          auto map = ringmap::CombinatorialMap::from_faces(faces, &index);
          if (!map.is_cubic() || map.euler_characteristic() != 2) continue;
          FaceMarks marks(map.num_faces(), 0);
          for (int i = 0; i < n; ++i) marks[index.map_face[i]] = 1;
          codes.insert(ringmap::canonical_form(map, marks).code.hex());
        } catch (const ringmap::StructuralError&) {
          // Gluing created a multi-edge; not a simple map.
        }
      }

    int pos = 0;
    while (pos < n && ++j[pos] > d) j[pos++] = 0;
    if (pos == n) break;
  }
  return codes;
}

CombinatorialMap random_relabel(const CombinatorialMap& map, std::mt19937_64& rng) {
  std::vector<int> perm(map.num_darts());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return map.relabeled(perm);
}

}  // namespace oracle
