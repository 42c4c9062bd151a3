#include "ringmap/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "ringmap/errors.hpp"
#include "ringmap/patchfill.hpp"

namespace ringmap {

namespace {

using Clock = std::chrono::steady_clock;

int thread_count(const Caps& caps) {
  if (caps.threads > 0) return caps.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs job(i) for i in [0, count) on `threads` workers.
template <class Job>
void parallel_for(std::size_t count, int threads, Job&& job) {
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  const int t = static_cast<int>(std::min<std::size_t>(threads, count));
  if (t <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < t; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

struct SequencePair {
  BoundarySequence a, b;
};

struct Found {
  CanonicalCode code;
  AssembledMap map;
  std::size_t alignment;
};

}  // namespace

MapRecord make_record(const CombinatorialMap& map, const std::vector<int>& ring, int p, int q) {
  const int n = static_cast<int>(ring.size());
  auto report = euler_check(map, p, q, n, ring);
  if (!report.ok()) throw StructuralError("map fails euler_check: " + report.failures.front());
  RingInfo info = analyze_ring(map, ring);
  if (p != q) {
    auto found = ring_of(map, q).faces;
    std::sort(found.begin(), found.end());
    auto want = ring;
    std::sort(want.begin(), want.end());
    if (found != want) throw StructuralError("ring_of disagrees with the constructed ring");
  }
  for (int f = 0; f < map.num_faces(); ++f)
    if (std::find(ring.begin(), ring.end(), f) == ring.end() && map.face_size(f) != p)
      throw StructuralError("domain face is not a p-gon");

  MapRecord r;
  r.p = p;
  r.q = q;
  r.n = n;
  r.V = map.num_vertices();
  r.E = map.num_edges();
  r.F = map.num_faces();
  FaceMarks marks(map.num_faces(), 0);
  for (int f : ring) marks[f] = 1;
  auto form = canonical_form(map, marks);
  r.canonical = std::move(form.code);
  r.aut_order = form.aut_order;

  // Inner is the side with fewer tails (k <= k'), ties broken by sequence.
  auto side_key = [&](int i) {
    auto s = canonical_seq(info.sides[i].sequence);
    return std::make_pair(s.length(), s);
  };
  int lo = side_key(0) <= side_key(1) ? 0 : 1;
  const RingSide& in = info.sides[lo];
  const RingSide& out = info.sides[1 - lo];
  r.inner_seq = canonical_seq(in.sequence);
  r.outer_seq = canonical_seq(out.sequence);
  try {
    if (q_complement(r.inner_seq, q) != r.outer_seq)
      throw StructuralError("domain sequences are not q-complements");
  } catch (const ComplementUndefined&) {
    throw StructuralError("inner sequence has no q-complement");
  }
  r.x_inner = in.interior_vertices;
  r.x_outer = out.interior_vertices;
  auto adm = admissible(p, q, n);
  if (adm.verdict == Admissibility::Verdict::Admissible && adm.excess != r.x_inner + r.x_outer)
    throw StructuralError("x + x' differs from the Euler excess");

  Patch pin = in.patch(map), pout = out.patch(map);
  r.self_complementary = patch_code(pin) == patch_code(pout);
  r.two_paths = r.x_inner + r.x_outer == 0 && pgon_adjacency_graph(pin).is_path() &&
                pgon_adjacency_graph(pout).is_path();
  r.non_polyhedral = n == 2;
  return r;
}

Catalog enumerate_maps(int p, int q, int n, const Caps& caps) {
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(caps.seconds));
  Catalog cat;
  cat.p = p;
  cat.q = q;
  cat.n = n;
  cat.admissibility = admissible(p, q, n);
  if (!cat.admissibility.admissible()) {
    cat.note = cat.admissibility.to_string();
    return cat;
  }

  FillOptions fill_opts;
  fill_opts.node_cap = caps.node_cap;
  fill_opts.deadline = deadline;
  SequenceQuery query;
  query.fill = fill_opts;
  query.state_cap = caps.state_cap;
  const int threads = thread_count(caps);

  std::mutex mu;
  std::string first_error;
  std::atomic<std::uint64_t> nodes{0};
  auto partial = [&](const std::string& why) {
    std::lock_guard lock(mu);
    if (first_error.empty()) first_error = why;
  };

  // Phase 1: for each length k <= k' the p-gonal sequences whose
  // q-complement is p-gonal too.
  const int k_max = (q - 4) * n / 2;
  std::vector<std::vector<SequencePair>> by_k(k_max + 1);
  parallel_for(k_max + 1, threads, [&](std::size_t k) {
    Filler filler(p, fill_opts);
    try {
      for (auto& a : pgonal_sequences(p, n, static_cast<int>(k), query, &filler)) {
        BoundarySequence b;
        try {
          b = q_complement(a, q);
        } catch (const ComplementUndefined&) {
          continue;
        }
        if (filler.decide(word_from_sequence(b))) by_k[k].push_back({a, b});
      }
    } catch (const ResourceExhausted& e) {
      partial("k=" + std::to_string(k) + ": " + e.what());
    }
    nodes += filler.nodes();
  });
  std::vector<SequencePair> pairs;
  for (auto& v : by_k) pairs.insert(pairs.end(), v.begin(), v.end());
  cat.sequence_pairs = pairs.size();

  // Phase 2: glue every labelled filling pair into the ring.
  std::vector<std::vector<Found>> found(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    Filler filler(p, fill_opts);
    try {
      const RingComplex ring = make_ring(layout_from_sequence(pairs[i].a, q));
      auto ins = filler.enumerate_labelled(ring.layout.inner_word());
      auto outs = filler.enumerate_labelled(ring.layout.outer_word());
      std::map<CanonicalCode, Found> local;
      for (std::size_t x = 0; x < ins.size(); ++x)
        for (std::size_t y = 0; y < outs.size(); ++y) {
          if (Clock::now() > deadline) throw ResourceExhausted("run ran past its deadline");
          AssembledMap m = glue(ring, ins[x], outs[y]);
          auto code = canonical_form(m.map, m.ring_marks()).code;
          if (!local.count(code)) local.emplace(code, Found{code, std::move(m), x * outs.size() + y});
        }
      for (auto& [code, f] : local) found[i].push_back(std::move(f));
    } catch (const ResourceExhausted& e) {
      partial("pair " + pairs[i].a.to_string() + ": " + e.what());
    }
    nodes += filler.nodes();
  });

  // Merge in pair order so provenance does not depend on scheduling.
  std::map<CanonicalCode, CatalogEntry> merged;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (auto& f : found[i]) {
      if (merged.count(f.code)) continue;
      CatalogEntry e;
      e.record = make_record(f.map.map, f.map.ring, p, q);
      e.assembled = std::move(f.map);
      e.gen_inner = pairs[i].a;
      e.gen_outer = pairs[i].b;
      e.alignment = f.alignment;
      merged.emplace(f.code, std::move(e));
    }
  for (auto& [code, e] : merged) cat.entries.push_back(std::move(e));
  cat.complete = first_error.empty();
  cat.note = first_error;
  cat.nodes = nodes;
  cat.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return cat;
}

std::vector<MapRecord> records_of(const Catalog& catalog) {
  std::vector<MapRecord> out;
  for (const auto& e : catalog.entries) out.push_back(e.record);
  return out;
}

}  // namespace ringmap
