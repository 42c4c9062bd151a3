#include "ringmap/paramdomain.hpp"

#include "ringmap/errors.hpp"

namespace ringmap {

std::string Admissibility::to_string() const {
  switch (verdict) {
    case Verdict::Admissible:
      return "admissible(x+x'=" + std::to_string(excess) + ")";
    case Verdict::AdmissibleUnconstrained:
      return "admissible(x+x' unconstrained)";
    case Verdict::Inadmissible:
      return "inadmissible(" + reason + ")";
  }
  return {};
}

long long euler_ring_residual(int p, int q, int n, long long excess) {
  return static_cast<long long>((4 - p) * (q - 4) + 4) * n + static_cast<long long>(6 - p) * excess -
         4LL * p;
}

Admissibility admissible(int p, int q, int n) {
  if (p < 3 || q < 4 || n < 2)
    throw ParameterError("admissible needs p >= 3, q >= 4, n >= 2");
  using V = Admissibility::Verdict;
  Admissibility out;
  // A ring of quadrangles carries no subdivision vertices, so both domains are
  // single p-gons bounded by the n spoke ends: only the p-prism.
  if (q == 4 && n != p) {
    out.reason = "q = 4 forces n = p";
    return out;
  }
  // Three p-gons around a vertex of a Platonic solid: trivial ring.
  if (p == q && n == 3 && p <= 5) {
    out.reason = "trivial Platonic ring";
    return out;
  }
  const long long coef = static_cast<long long>((4 - p) * (q - 4) + 4);
  if (p == 6) {
    if (coef * n == 24) {
      out.verdict = V::AdmissibleUnconstrained;
    } else {
      out.reason = "(12-2q)n != 24";
    }
    return out;
  }
  const long long num = 4LL * p - coef * n;
  const long long den = 6 - p;
  if (num % den != 0) {
    out.reason = "x+x' not integral";
    return out;
  }
  const long long excess = num / den;
  if (excess < 0) {
    out.reason = "x+x' = " + std::to_string(excess) + " < 0";
    return out;
  }
  out.verdict = V::Admissible;
  out.excess = static_cast<int>(excess);
  return out;
}

std::vector<DomainEntry> scan_domain(int p_min, int p_max, int q_min, int q_max, int n_max) {
  std::vector<DomainEntry> out;
  for (int p = std::max(p_min, 3); p <= p_max; ++p)
    for (int q = std::max(q_min, 4); q <= q_max; ++q)
      for (int n = 2; n <= n_max; ++n) {
        auto a = admissible(p, q, n);
        if (a.admissible()) out.push_back({p, q, n, a});
      }
  return out;
}

std::optional<TwoPathsShape> two_paths_n(int p, int q) {
  if (p < 3 || q < 4) return std::nullopt;
  const int den = 4 - (p - 4) * (q - 4);
  if (den <= 0 || (4 * p) % den != 0) return std::nullopt;
  const int n = 4 * p / den;
  if (n < 2) return std::nullopt;
  TwoPathsShape shape{n, std::nullopt};
  if (p != 4 && (n - 4) % (p - 4) == 0) shape.path_length = (n - 4) / (p - 4);
  return shape;
}

}  // namespace ringmap
