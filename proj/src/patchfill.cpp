#include "ringmap/patchfill.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <unordered_set>

#include "ringmap/errors.hpp"

namespace ringmap {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

struct Arcs {
  int L = 0;
  std::vector<int> tail_pos;
  std::vector<int> corners;  // corners[i]: corners between tail i and tail i+1
};

Arcs arcs_of(const BoundaryWord& w) {
  Arcs arcs;
  arcs.L = static_cast<int>(w.size());
  for (int i = 0; i < arcs.L; ++i)
    if (w[i] == kTail) arcs.tail_pos.push_back(i);
  const int k = static_cast<int>(arcs.tail_pos.size());
  for (int i = 0; i < k; ++i) {
    int gap = arcs.tail_pos[(i + 1) % k] - arcs.tail_pos[i] - 1;
    if (gap < 0 || k == 1) gap += arcs.L;
    arcs.corners.push_back(gap);
  }
  return arcs;
}

// Key shared by every rotation and reflection of the word.
std::string word_key(const BoundaryWord& w, const Arcs& arcs) {
  if (arcs.tail_pos.empty()) return "D" + std::to_string(w.size());
  auto canon = canonical_entries(arcs.corners);
  std::string key;
  key.reserve(canon.size());
  for (int a : canon) key.push_back(static_cast<char>(a + 1));
  return key;
}

struct SubHole {
  BoundaryWord word;
  std::vector<int> refs;  // parent ids: hole position, or L + new-vertex index
};

struct Option {
  std::vector<int> face;
  int num_new = 0;
  std::vector<SubHole> holes;
};

int pick_pivot(const Arcs& arcs, PivotRule rule) {
  if (rule == PivotRule::FirstArc) return 0;
  return static_cast<int>(std::max_element(arcs.corners.begin(), arcs.corners.end()) -
                          arcs.corners.begin());
}

// Every face that can contain the pivot arc. The face takes the pivot arc and
// possibly further pairwise non-adjacent arcs, joined by paths of new
// vertices; the gaps between its arcs become independent holes. `visit`
// returns true to stop.
template <class Visit>
void for_each_option(const BoundaryWord& w, const Arcs& arcs, int p, int pivot, Visit&& visit) {
  const int k = static_cast<int>(arcs.tail_pos.size());
  const int L = arcs.L;
  std::vector<int> offsets{0};
  std::vector<int> path;
  bool stop = false;

  auto arc_at = [&](int offset) { return (pivot + offset) % k; };

  auto emit = [&]() {
    const int r = static_cast<int>(offsets.size());
    Option opt;
    std::vector<int> base(r + 1, 0);
    for (int j = 0; j < r; ++j) base[j + 1] = base[j] + path[j];
    opt.num_new = base[r];
    for (int j = 0; j < r; ++j) {
      int i = arc_at(offsets[j]);
      int pos = arcs.tail_pos[i];
      int end = arcs.tail_pos[(i + 1) % k];
      opt.face.push_back(pos);
      do {
        pos = (pos + 1) % L;
        opt.face.push_back(pos);
      } while (pos != end);
      for (int m = 0; m < path[j]; ++m) opt.face.push_back(L + base[j] + m);
    }
    for (int j = 0; j < r; ++j) {
      int i = arc_at(offsets[j]);
      int start = arcs.tail_pos[(i + 1) % k];
      int stop_arc = j + 1 < r ? arc_at(offsets[j + 1]) : pivot;
      int end = arcs.tail_pos[stop_arc];
      SubHole h;
      int pos = start;
      while (true) {
        h.refs.push_back(pos);
        h.word.push_back(pos == start || pos == end ? std::uint8_t{kCorner} : w[pos]);
        if (pos == end) break;
        pos = (pos + 1) % L;
      }
      for (int m = path[j] - 1; m >= 0; --m) {
        h.refs.push_back(L + base[j] + m);
        h.word.push_back(kTail);
      }
      opt.holes.push_back(std::move(h));
    }
    stop = visit(opt);
  };

  auto distribute = [&](auto&& self, int j, int left) -> void {
    const int r = static_cast<int>(offsets.size());
    if (stop) return;
    if (j == r - 1) {
      path.push_back(left);
      emit();
      path.pop_back();
      return;
    }
    for (int m = 0; m <= left && !stop; ++m) {
      path.push_back(m);
      self(self, j + 1, left - m);
      path.pop_back();
    }
  };

  auto choose = [&](auto&& self, int next, int used) -> void {
    if (stop) return;
    distribute(distribute, 0, p - used);
    for (int d = next; d <= k - 2 && !stop; ++d) {
      int cost = arcs.corners[arc_at(d)] + 2;
      if (used + cost > p) continue;
      offsets.push_back(d);
      self(self, d + 2, used + cost);
      offsets.pop_back();
    }
  };

  int used = arcs.corners[pivot] + 2;
  if (used > p) return;
  choose(choose, 2, used);
}

// Cheap necessary conditions. Returns 1 when decided fillable, 0 when decided
// unfillable, -1 when search is needed.
int quick_verdict(const BoundaryWord& w, const Arcs& arcs, int p) {
  const int k = static_cast<int>(arcs.tail_pos.size());
  if (k == 0) return arcs.L == p ? 1 : 0;
  if (k == 1) return 0;
  for (int a : arcs.corners)
    if (a > p - 2) return 0;
  if (!euler_profile(p, w)) return 0;
  return -1;
}

}  // namespace

Filler::Filler(int p, FillOptions options) : p_(p), options_(options) {
  if (p < 3) throw ParameterError("p must be at least 3");
}

void Filler::tick() {
  if (++nodes_ > options_.node_cap)
    throw ResourceExhausted("fill search exceeded node cap of " + std::to_string(options_.node_cap));
  if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > options_.deadline)
    throw ResourceExhausted("fill search ran past its deadline");
}

bool Filler::decide(const BoundaryWord& w) {
  Arcs arcs = arcs_of(w);
  int quick = quick_verdict(w, arcs, p_);
  if (quick >= 0) return quick == 1;
  std::string key = word_key(w, arcs);
  if (auto it = decide_memo_.find(key); it != decide_memo_.end()) return it->second;
  tick();

  bool found = false;
  for_each_option(w, arcs, p_, pick_pivot(arcs, options_.pivot), [&](const Option& opt) {
    for (const auto& h : opt.holes)
      if (quick_verdict(h.word, arcs_of(h.word), p_) == 0) return false;
    for (const auto& h : opt.holes)
      if (!decide(h.word)) return false;
    found = true;
    return true;
  });
  decide_memo_.emplace(std::move(key), found);
  return found;
}

std::uint64_t Filler::count(const BoundaryWord& w) {
  Arcs arcs = arcs_of(w);
  int quick = quick_verdict(w, arcs, p_);
  if (quick >= 0 && arcs.tail_pos.size() < 2) return quick == 1 ? 1 : 0;
  if (quick == 0) return 0;
  std::string key = word_key(w, arcs);
  if (auto it = count_memo_.find(key); it != count_memo_.end()) return it->second;
  tick();

  std::uint64_t total = 0;
  for_each_option(w, arcs, p_, pick_pivot(arcs, options_.pivot), [&](const Option& opt) {
    for (const auto& h : opt.holes)
      if (quick_verdict(h.word, arcs_of(h.word), p_) == 0) return false;
    std::uint64_t prod = 1;
    for (const auto& h : opt.holes) {
      prod = sat_mul(prod, count(h.word));
      if (prod == 0) break;
    }
    total = sat_add(total, prod);
    return false;
  });
  count_memo_.emplace(std::move(key), total);
  decide_memo_.emplace(word_key(w, arcs), total > 0);
  return total;
}

std::vector<Filler::LocalFilling> Filler::enumerate_hole(const BoundaryWord& w) {
  Arcs arcs = arcs_of(w);
  int quick = quick_verdict(w, arcs, p_);
  if (quick == 0) return {};
  if (arcs.tail_pos.empty()) {
    LocalFilling one;
    one.faces.emplace_back();
    for (int i = 0; i < arcs.L; ++i) one.faces.back().push_back(i);
    return {one};
  }
  if (!decide(w)) return {};
  tick();

  const int L = arcs.L;
  std::vector<LocalFilling> out;
  for_each_option(w, arcs, p_, pick_pivot(arcs, options_.pivot), [&](const Option& opt) {
    for (const auto& h : opt.holes)
      if (!decide(h.word)) return false;
    std::vector<std::vector<LocalFilling>> parts;
    for (const auto& h : opt.holes) parts.push_back(enumerate_hole(h.word));

    // Cartesian product over the independent holes.
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      LocalFilling combined;
      combined.faces.push_back(opt.face);
      int next_new = opt.num_new;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& sub = parts[j][pick[j]];
        const auto& refs = opt.holes[j].refs;
        const int Ls = static_cast<int>(refs.size());
        for (const auto& f : sub.faces) {
          std::vector<int> mapped;
          mapped.reserve(f.size());
          for (int v : f) mapped.push_back(v < Ls ? refs[v] : L + next_new + (v - Ls));
          combined.faces.push_back(std::move(mapped));
        }
        next_new += sub.num_new;
      }
      combined.num_new = next_new;
      out.push_back(std::move(combined));

      std::size_t j = 0;
      while (j < parts.size() && ++pick[j] == parts[j].size()) pick[j++] = 0;
      if (j == parts.size()) break;
    }
    return false;
  });
  return out;
}

Patch Filler::to_patch(LocalFilling local, int L) const {
  Patch patch;
  patch.p = p_;
  patch.num_vertices = L + local.num_new;
  patch.faces = std::move(local.faces);
  patch.boundary.resize(L);
  for (int i = 0; i < L; ++i) patch.boundary[i] = i;
  return patch;
}

std::vector<Patch> Filler::enumerate_labelled(const BoundaryWord& w) {
  std::vector<Patch> out;
  const int L = static_cast<int>(w.size());
  for (auto& local : enumerate_hole(w)) out.push_back(to_patch(std::move(local), L));
  return out;
}

std::optional<Filler::LocalFilling> Filler::witness(const BoundaryWord& w) {
  if (!decide(w)) return std::nullopt;
  Arcs arcs = arcs_of(w);
  if (arcs.tail_pos.empty()) {
    LocalFilling one;
    one.faces.emplace_back();
    for (int i = 0; i < arcs.L; ++i) one.faces.back().push_back(i);
    return one;
  }
  const int L = arcs.L;
  std::optional<LocalFilling> found;
  for_each_option(w, arcs, p_, pick_pivot(arcs, options_.pivot), [&](const Option& opt) {
    for (const auto& h : opt.holes)
      if (!decide(h.word)) return false;
    LocalFilling combined;
    combined.faces.push_back(opt.face);
    int next_new = opt.num_new;
    for (const auto& h : opt.holes) {
      auto sub = witness(h.word);
      const int Ls = static_cast<int>(h.refs.size());
      for (const auto& f : sub->faces) {
        std::vector<int> mapped;
        for (int v : f) mapped.push_back(v < Ls ? h.refs[v] : L + next_new + (v - Ls));
        combined.faces.push_back(std::move(mapped));
      }
      next_new += sub->num_new;
    }
    combined.num_new = next_new;
    found = std::move(combined);
    return true;
  });
  return found;
}

std::optional<Patch> Filler::find_one(const BoundaryWord& w) {
  auto local = witness(w);
  if (!local) return std::nullopt;
  return to_patch(std::move(*local), static_cast<int>(w.size()));
}

FillResult fill(const BoundarySequence& a, int p, FillMode mode, FillOptions options) {
  Filler filler(p, options);
  FillResult result;
  const BoundaryWord w = word_from_sequence(a);
  switch (mode) {
    case FillMode::Decide:
      result.fillable = filler.decide(w);
      result.count = result.fillable ? 1 : 0;
      break;
    case FillMode::Count:
      result.count = filler.count(w);
      result.fillable = result.count > 0;
      break;
    case FillMode::Enumerate: {
      std::vector<std::pair<CanonicalCode, Patch>> classes;
      std::set<CanonicalCode> seen;
      for (auto& patch : filler.enumerate_labelled(w)) {
        auto code = patch_code(patch);
        if (seen.insert(code).second) classes.emplace_back(std::move(code), std::move(patch));
      }
      std::sort(classes.begin(), classes.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& c : classes) result.patches.push_back(std::move(c.second));
      result.count = result.patches.size();
      result.fillable = result.count > 0;
      break;
    }
  }
  result.nodes = filler.nodes();
  return result;
}

namespace {

std::optional<EulerProfile> target_profile(int p, int n, int k) {
  BoundaryWord w = k == 0 ? BoundaryWord(n, kCorner) : word_from_sequence([&] {
    std::vector<int> e(k, 0);
    e[0] = n;
    return BoundarySequence(e);
  }());
  if (p == 6) {
    if (n - k != 6) return std::nullopt;
    return EulerProfile{};  // face count depends on the shape
  }
  return euler_profile(p, w);
}

std::string state_key(const std::vector<int>& canon) {
  std::string key;
  key.reserve(canon.size());
  for (int a : canon) key.push_back(static_cast<char>(a + 1));
  return key;
}

std::vector<int> key_entries(const std::string& key) {
  std::vector<int> e;
  e.reserve(key.size());
  for (char c : key) e.push_back(static_cast<unsigned char>(c) - 1);
  return e;
}

// One BFS layer of ear additions. States are canonical boundary sequences;
// the start state (a lone face) is handled by the caller.
template <class Visit>
void for_each_ear(const BoundaryWord& w, int p, Visit&& visit) {
  const int L = static_cast<int>(w.size());
  for (int s = 0; s < L; ++s) {
    if (w[s] != kCorner) continue;
    for (int len = 1; len <= p - 1 && len < L; ++len) {
      int endp = (s + len) % L;
      if (len > 1 && w[(s + len - 1) % L] != kTail) break;
      if (w[endp] != kCorner) continue;
      if (L + p - 2 * len < 3) continue;
      BoundaryWord next;
      next.reserve(L + p - 2 * len);
      next.push_back(kTail);
      for (int i = 0; i < p - len - 1; ++i) next.push_back(kCorner);
      next.push_back(kTail);
      for (int i = len + 1; i < L; ++i) next.push_back(w[(s + i) % L]);
      visit(next, len - 1);
    }
  }
}

template <class Collect>
void grow(int p, int f_max, int x_max, std::uint64_t state_cap,
          std::chrono::steady_clock::time_point deadline, Collect&& collect) {
  if (p == 6) throw ParameterError("growth is not available for hexagons");
  std::unordered_map<std::string, int> layer;
  {
    BoundaryWord start(p, kCorner);
    for_each_ear(start, p, [&](const BoundaryWord& next, int dx) {
      if (dx > x_max) return;
      layer.emplace(state_key(canonical_entries(sequence_from_word(next).entries())), dx);
    });
  }
  collect(1, BoundarySequence::degenerate(p));
  std::uint64_t total = 0;
  for (int f = 2; f <= f_max && !layer.empty(); ++f) {
    std::unordered_map<std::string, int> next_layer;
    for (const auto& [key, x] : layer) {
      BoundarySequence seq(key_entries(key));
      collect(f, seq);
      if (f == f_max) continue;
      for_each_ear(word_from_sequence(seq), p, [&](const BoundaryWord& next, int dx) {
        if (x + dx > x_max) return;
        next_layer.emplace(state_key(canonical_entries(sequence_from_word(next).entries())), x + dx);
      });
      if (next_layer.size() > state_cap)
        throw ResourceExhausted("growth exceeded state cap of " + std::to_string(state_cap));
      if ((next_layer.size() & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline)
        throw ResourceExhausted("growth ran past its deadline");
    }
    total += next_layer.size();
    if (total > state_cap)
      throw ResourceExhausted("growth exceeded state cap of " + std::to_string(state_cap));
    layer.swap(next_layer);
  }
}

}  // namespace

std::map<std::pair<int, int>, std::vector<BoundarySequence>> grow_sequences(int p, int f_max,
                                                                             int x_max,
                                                                             std::uint64_t state_cap) {
  std::map<std::pair<int, int>, std::set<BoundarySequence>> acc;
  grow(p, f_max, x_max, state_cap, std::chrono::steady_clock::time_point::max(),
       [&](int, const BoundarySequence& s) {
    acc[{s.length(), s.sum()}].insert(s);
  });
  std::map<std::pair<int, int>, std::vector<BoundarySequence>> out;
  for (auto& [key, set] : acc) out[key].assign(set.begin(), set.end());
  return out;
}

std::vector<BoundarySequence> pgonal_sequences(int p, int n, int k, const SequenceQuery& query,
                                               Filler* filler) {
  if (p < 3) throw ParameterError("p must be at least 3");
  if (n < 0 || k < 0) throw ParameterError("n and k must be non-negative");
  if (k == 0) {
    if (n == p) return {BoundarySequence::degenerate(n)};
    return {};
  }
  if (k == 1) return {};
  auto profile = target_profile(p, n, k);
  if (!profile) return {};

  SequenceSource source = query.source;
  if (source == SequenceSource::Auto) {
    source = (p == 6 || composition_count(k, n, p - 2) <= 4e6) ? SequenceSource::Sieve
                                                               : SequenceSource::Growth;
  }

  std::vector<BoundarySequence> out;
  if (source == SequenceSource::Growth) {
    if (p == 6) throw ParameterError("growth is not available for hexagons");
    std::set<BoundarySequence> found;
    grow(p, profile->f, profile->x, query.state_cap, query.fill.deadline, [&](int f, const BoundarySequence& s) {
      if (f == profile->f && s.length() == k && s.sum() == n) found.insert(s);
    });
    out.assign(found.begin(), found.end());
    return out;
  }

  Filler local(p, query.fill);
  Filler& use = filler && filler->p() == p ? *filler : local;
  for_each_bracelet(k, n, p - 2, [&](const std::vector<int>& a) {
    BoundarySequence seq(a);
    if (use.decide(word_from_sequence(seq))) out.push_back(std::move(seq));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::pair<int, int>, std::vector<BoundarySequence>> pentagonal_table(
    int k_max, const FillOptions& options) {
  std::map<std::pair<int, int>, std::vector<BoundarySequence>> table;
  Filler filler(5, options);
  SequenceQuery query;
  query.fill = options;
  for (int k = 2; k <= k_max; ++k) {
    int n_max = std::min(3 * k, (10 + k) / 2);
    for (int n = 0; n <= n_max; ++n) table[{k, n}] = pgonal_sequences(5, n, k, query, &filler);
  }
  return table;
}

std::vector<Patch> enumerate_path_patches(int p, int f) {
  if (p < 3 || f < 1) throw ParameterError("need p >= 3 and f >= 1");
  Patch first;
  first.p = p;
  first.num_vertices = p;
  first.faces.emplace_back();
  for (int i = 0; i < p; ++i) first.faces.back().push_back(i);
  first.boundary = first.faces.back();

  std::vector<Patch> layer{first};
  for (int step = 1; step < f; ++step) {
    std::vector<Patch> next;
    std::unordered_set<std::string> seen;
    for (const auto& patch : layer) {
      const auto& last = patch.faces.back();
      std::set<int> in_last(last.begin(), last.end());
      auto word = boundary_word(patch);
      const int L = static_cast<int>(patch.boundary.size());
      for (int i = 0; i < L; ++i) {
        int u = patch.boundary[i], v = patch.boundary[(i + 1) % L];
        if (word[i] != kCorner || word[(i + 1) % L] != kCorner) continue;
        if (!in_last.count(u) || !in_last.count(v)) continue;
        Patch grown = patch;
        std::vector<int> face{v, u};
        std::vector<int> fresh;
        for (int m = 0; m < p - 2; ++m) fresh.push_back(grown.num_vertices++);
        face.insert(face.end(), fresh.begin(), fresh.end());
        grown.faces.push_back(face);
        std::vector<int> boundary;
        for (int j = 0; j <= i; ++j) boundary.push_back(patch.boundary[j]);
        boundary.insert(boundary.end(), fresh.begin(), fresh.end());
        for (int j = i + 1; j < L; ++j) boundary.push_back(patch.boundary[j]);
        grown.boundary = std::move(boundary);
        next.push_back(std::move(grown));
      }
    }
    // Growth continues from the newest face, so dedupe with that face marked.
    std::vector<Patch> unique;
    for (auto& patch : next) {
      CombinatorialMap::FaceListIndex index;
      auto all = patch.faces;
      all.emplace_back(patch.boundary.rbegin(), patch.boundary.rend());
      auto map = CombinatorialMap::from_faces(all, &index);
      FaceMarks marks(map.num_faces(), 0);
      marks[index.map_face.back()] = 1;
      marks[index.map_face[patch.faces.size() - 1]] = 2;
      auto key = canonical_form(map, marks).code.hex();
      if (seen.insert(key).second) unique.push_back(std::move(patch));
    }
    layer = std::move(unique);
  }

  std::vector<std::pair<CanonicalCode, Patch>> classes;
  std::set<CanonicalCode> seen;
  for (auto& patch : layer) {
    auto code = patch_code(patch);
    if (seen.insert(code).second) classes.emplace_back(std::move(code), std::move(patch));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Patch> out;
  for (auto& c : classes) out.push_back(std::move(c.second));
  return out;
}

}  // namespace ringmap
