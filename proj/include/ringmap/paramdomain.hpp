#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ringmap {

/// What the Euler relation says about a parameter triple (p, q, n).
struct Admissibility {
  enum class Verdict { Admissible, AdmissibleUnconstrained, Inadmissible };
  Verdict verdict = Verdict::Inadmissible;
  /// x + x' (interior vertices of both domains) when Admissible.
  int excess = 0;
  std::string reason;

  bool admissible() const { return verdict != Verdict::Inadmissible; }
  std::string to_string() const;
};

/// Necessary conditions only; existence is settled by search.
/// p >= 3, q >= 4, n >= 2 or ParameterError.
Admissibility admissible(int p, int q, int n);

struct DomainEntry {
  int p, q, n;
  Admissibility admissibility;
};

/// Admissible triples, sorted by (p, q, n).
std::vector<DomainEntry> scan_domain(int p_min, int p_max, int q_min, int q_max, int n_max);

struct TwoPathsShape {
  int n;
  /// (n - 4) / (p - 4) p-gons per domain path; absent when p = 4 (any length).
  std::optional<int> path_length;
};

/// The n for which x + x' = 0 is forced: n = 4p / (4 - (p-4)(q-4)).
std::optional<TwoPathsShape> two_paths_n(int p, int q);

/// Left side minus right side of ((4-p)(q-4)+4) n + (6-p)(x+x') = 4p.
long long euler_ring_residual(int p, int q, int n, long long excess);

}  // namespace ringmap
