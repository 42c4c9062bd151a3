#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ringmap/patch.hpp"
#include "ringmap/sequence.hpp"

namespace ringmap {

enum class PivotRule {
  /// Extend at the arc with the most corners (fewest face choices).
  FailFirst,
  /// Extend at the arc following the first tail of the word.
  FirstArc,
};

struct FillOptions {
  PivotRule pivot = PivotRule::FailFirst;
  std::uint64_t node_cap = 100'000'000;
  /// Wall-clock limit; checked every few thousand nodes.
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
};

/// Fills a boundary word with p-gons by gluing one face at a time at a pivot
/// arc of the open region. The face through the pivot arc may touch further
/// arcs, which splits the region; each piece is solved independently.
///
/// Decide and count results are memoized on the canonical form of the open
/// boundary, so one Filler should be reused across many queries with the
/// same p. Not thread-safe; use one instance per thread.
class Filler {
 public:
  explicit Filler(int p, FillOptions options = {});

  int p() const { return p_; }
  bool decide(const BoundaryWord& w);
  /// Fillings of the labelled boundary (boundary symmetries not factored
  /// out). Saturates at UINT64_MAX.
  std::uint64_t count(const BoundaryWord& w);
  /// Every filling of the labelled boundary; boundary vertex i of each patch
  /// is position i of `w`.
  std::vector<Patch> enumerate_labelled(const BoundaryWord& w);
  /// One filling (labelled as in enumerate_labelled), or none.
  std::optional<Patch> find_one(const BoundaryWord& w);

  std::uint64_t nodes() const { return nodes_; }
  std::size_t memo_size() const { return decide_memo_.size(); }

 private:
  struct LocalFilling {
    std::vector<std::vector<int>> faces;
    int num_new = 0;
  };

  std::vector<LocalFilling> enumerate_hole(const BoundaryWord& w);
  std::optional<LocalFilling> witness(const BoundaryWord& w);
  Patch to_patch(LocalFilling local, int L) const;
  void tick();

  int p_;
  FillOptions options_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, bool> decide_memo_;
  std::unordered_map<std::string, std::uint64_t> count_memo_;
};

enum class FillMode { Decide, Enumerate, Count };

struct FillResult {
  bool fillable = false;
  /// Labelled fillings (Count mode) or isomorphism classes (Enumerate mode).
  std::uint64_t count = 0;
  /// Enumerate mode: one patch per isomorphism class, sorted by patch code.
  std::vector<Patch> patches;
  std::uint64_t nodes = 0;
};

FillResult fill(const BoundarySequence& a, int p, FillMode mode, FillOptions options = {});

/// How p-gonal sequences of a given (n, k) are produced.
enum class SequenceSource {
  Auto,
  /// Every necklace with entries <= p-2, filtered by Filler::decide.
  Sieve,
  /// Breadth-first growth of patches one face at a time, tracking only the
  /// boundary word (p != 6).
  Growth,
};

struct SequenceQuery {
  SequenceSource source = SequenceSource::Auto;
  FillOptions fill;
  std::uint64_t state_cap = 50'000'000;
};

/// Canonical p-gonal sequences with sum n and length k, sorted.
std::vector<BoundarySequence> pgonal_sequences(int p, int n, int k, const SequenceQuery& query = {},
                                               Filler* filler = nullptr);

/// Canonical p-gonal sequences reachable by growth with at most f_max faces
/// and x_max interior vertices, keyed by (k, n). p != 6.
std::map<std::pair<int, int>, std::vector<BoundarySequence>> grow_sequences(
    int p, int f_max, int x_max, std::uint64_t state_cap = 50'000'000);

/// (k, n) -> pentagonal sequences with k <= k_max.
std::map<std::pair<int, int>, std::vector<BoundarySequence>> pentagonal_table(
    int k_max, const FillOptions& options = {});

/// Patches whose p-gon adjacency graph is a path of f faces, up to isomorphism.
std::vector<Patch> enumerate_path_patches(int p, int f);

}  // namespace ringmap
