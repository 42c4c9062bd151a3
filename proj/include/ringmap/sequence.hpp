#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ringmap {

/// Cyclic boundary sequence a_1..a_k: a_i counts the degree-2 boundary
/// vertices (corners) between consecutive degree-3 boundary vertices (tails).
/// The empty sequence is kept as `deg(n)`: a boundary of n corners, no tails.
class BoundarySequence {
 public:
  BoundarySequence() = default;
  explicit BoundarySequence(std::vector<int> entries);
  static BoundarySequence degenerate(int n);

  /// Accepts "3,0,1,0", the compact digit form "3010" and "deg(5)".
  static BoundarySequence parse(std::string_view text);

  bool is_degenerate() const { return entries_.empty(); }
  int length() const { return static_cast<int>(entries_.size()); }
  int sum() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }

  /// Representative with the lexicographically largest rotation/reflection,
  /// written compactly when every entry is a single digit ("30103010").
  std::string to_string() const;
  /// Entries as written, no re-rotation.
  std::string raw_string() const;

  friend bool operator==(const BoundarySequence&, const BoundarySequence&) = default;
  friend auto operator<=>(const BoundarySequence& a, const BoundarySequence& b) {
    if (auto c = a.entries_ <=> b.entries_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::vector<int> entries_;
  int n_ = 0;
};

/// Lexicographically minimal rotation/reflection.
BoundarySequence canonical_seq(const BoundarySequence& a);
/// Same, on raw entries.
std::vector<int> canonical_entries(const std::vector<int>& a);
std::vector<int> maximal_entries(const std::vector<int>& a);

/// Smallest cyclic period (a rotation by it maps the sequence to itself).
int period(const BoundarySequence& a);

/// Boundary word: one role per boundary vertex in cyclic order.
enum Role : std::uint8_t { kCorner = 0, kTail = 1 };
using BoundaryWord = std::vector<std::uint8_t>;

/// T C^{a_1} T C^{a_2} ...; deg(n) gives n corners.
BoundaryWord word_from_sequence(const BoundarySequence& a);
BoundarySequence sequence_from_word(const BoundaryWord& w);

/// Per-quadrangle placement of the q-4 subdivision vertices of the n-prism
/// ring: j[i] of them on the inner edge of quadrangle i, the rest outside.
struct RingLayout {
  int n = 0;
  int q = 0;
  std::vector<int> j;

  int inner_tails() const;
  int outer_tails() const;
  /// Inner ring boundary in counterclockwise order: corner i then j[i] tails.
  BoundaryWord inner_word() const;
  /// Outer ring boundary as seen from the outer domain (that domain on the
  /// left), i.e. the counterclockwise outer word reversed.
  BoundaryWord outer_word() const;
  RingLayout complement() const;
};

RingLayout layout_from_sequence(const BoundarySequence& a, int q);
BoundarySequence q_complement(const BoundarySequence& a, int q);
bool is_self_complemented(const BoundarySequence& a, int q);

/// All canonical classes with entry sum n and 1 <= k <= floor((q-4)n/2),
/// ordered by length then lexicographically.
std::vector<BoundarySequence> generate_feasible(int n, int q);

/// Calls `visit` with every canonical sequence of length k, sum n and all
/// entries <= max_entry.
template <class Visit>
void for_each_bracelet(int k, int n, int max_entry, Visit&& visit);

/// Number of weak compositions of n into k parts each <= max_entry.
double composition_count(int k, int n, int max_entry);

namespace detail {
bool is_canonical(const std::vector<int>& a);
}

template <class Visit>
void for_each_bracelet(int k, int n, int max_entry, Visit&& visit) {
  if (k <= 0) return;
  std::vector<int> a(k, 0);
  // Canonical (minimal) forms start with their smallest entry, so a[0] bounds
  // every later entry from below.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k) {
      if (left == 0 && detail::is_canonical(a)) visit(a);
      return;
    }
    int remaining = k - pos;
    int lo = pos == 0 ? 0 : a[0];
    for (int v = lo; v <= max_entry && v <= left; ++v) {
      int rest = left - v;
      int lo_rest = pos == 0 ? v : a[0];
      if (rest < lo_rest * (remaining - 1)) break;
      if (rest > max_entry * (remaining - 1)) continue;
      a[pos] = v;
      self(self, pos + 1, rest);
    }
  };
  rec(rec, 0, n);
}

}  // namespace ringmap
