#include "ringmap/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ringmap/errors.hpp"

namespace ringmap {

BoundarySequence::BoundarySequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ParameterError("use BoundarySequence::degenerate for k = 0");
  n_ = 0;
  for (int e : entries_) {
    if (e < 0) throw ParameterError("boundary sequence entries must be non-negative");
    n_ += e;
  }
}

BoundarySequence BoundarySequence::degenerate(int n) {
  if (n < 1) throw ParameterError("degenerate sequence needs n >= 1");
  BoundarySequence s;
  s.n_ = n;
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParameterError("bad integer in boundary sequence: '" + std::string(s) + "'");
  return value;
}

// Lexicographic comparison of rotation `r` (optionally reversed) against `best`.
template <class Better>
std::vector<int> extremal_entries(const std::vector<int>& a, Better better) {
  const int k = static_cast<int>(a.size());
  std::vector<int> best = a, cand(k);
  for (int dir = 0; dir < 2; ++dir)
    for (int r = 0; r < k; ++r) {
      for (int i = 0; i < k; ++i)
        cand[i] = dir == 0 ? a[(r + i) % k] : a[((r - i) % k + k) % k];
      if (better(cand, best)) best = cand;
    }
  return best;
}

}  // namespace

BoundarySequence BoundarySequence::parse(std::string_view text) {
  text = trim(text);
  if (text.starts_with("deg(") && text.ends_with(")"))
    return degenerate(parse_int(text.substr(4, text.size() - 5)));
  if (text.empty()) throw ParameterError("empty boundary sequence");
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      entries.push_back(parse_int(text.substr(start, comma - start)));
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParameterError("bad character in boundary sequence: '" + std::string(text) + "'");
      entries.push_back(c - '0');
    }
  }
  return BoundarySequence(std::move(entries));
}

std::string BoundarySequence::raw_string() const {
  if (is_degenerate()) return "deg(" + std::to_string(n_) + ")";
  bool compact = std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 9; });
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string BoundarySequence::to_string() const {
  if (is_degenerate()) return raw_string();
  return BoundarySequence(maximal_entries(entries_)).raw_string();
}

std::vector<int> canonical_entries(const std::vector<int>& a) {
  return extremal_entries(a, [](const auto& x, const auto& y) { return x < y; });
}

std::vector<int> maximal_entries(const std::vector<int>& a) {
  return extremal_entries(a, [](const auto& x, const auto& y) { return x > y; });
}

BoundarySequence canonical_seq(const BoundarySequence& a) {
  if (a.is_degenerate()) return a;
  return BoundarySequence(canonical_entries(a.entries()));
}

namespace detail {
bool is_canonical(const std::vector<int>& a) { return canonical_entries(a) == a; }
}  // namespace detail

int period(const BoundarySequence& a) {
  if (a.is_degenerate()) throw ParameterError("period of a degenerate sequence");
  const auto& e = a.entries();
  const int k = a.length();
  for (int d = 1; d < k; ++d) {
    if (k % d) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = e[i] == e[(i + d) % k];
    if (ok) return d;
  }
  return k;
}

BoundaryWord word_from_sequence(const BoundarySequence& a) {
  if (a.is_degenerate()) return BoundaryWord(a.sum(), kCorner);
  BoundaryWord w;
  for (int e : a.entries()) {
    w.push_back(kTail);
    w.insert(w.end(), e, kCorner);
  }
  return w;
}

BoundarySequence sequence_from_word(const BoundaryWord& w) {
  const int len = static_cast<int>(w.size());
  int first = -1;
  for (int i = 0; i < len; ++i)
    if (w[i] == kTail) {
      first = i;
      break;
    }
  if (first < 0) return BoundarySequence::degenerate(len);
  std::vector<int> entries;
  int run = 0;
  for (int s = 1; s <= len; ++s) {
    if (w[(first + s) % len] == kTail) {
      entries.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  return BoundarySequence(std::move(entries));
}

int RingLayout::inner_tails() const {
  int k = 0;
  for (int v : j) k += v;
  return k;
}

int RingLayout::outer_tails() const { return (q - 4) * n - inner_tails(); }

BoundaryWord RingLayout::inner_word() const {
  BoundaryWord w;
  for (int v : j) {
    w.push_back(kCorner);
    w.insert(w.end(), v, kTail);
  }
  return w;
}

BoundaryWord RingLayout::outer_word() const {
  BoundaryWord w;
  for (int v : j) {
    w.push_back(kCorner);
    w.insert(w.end(), q - 4 - v, kTail);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

RingLayout RingLayout::complement() const {
  RingLayout c{n, q, {}};
  for (auto it = j.rbegin(); it != j.rend(); ++it) c.j.push_back(q - 4 - *it);
  return c;
}

RingLayout layout_from_sequence(const BoundarySequence& a, int q) {
  if (q < 4) throw ParameterError("q must be at least 4");
  BoundaryWord w = word_from_sequence(a);
  const int len = static_cast<int>(w.size());
  int first = -1;
  for (int i = 0; i < len; ++i)
    if (w[i] == kCorner) {
      first = i;
      break;
    }
  if (first < 0) throw ComplementUndefined("sequence has no corners (sum 0)");
  RingLayout layout{a.sum(), q, {}};
  int run = 0;
  for (int s = 1; s <= len; ++s) {
    if (w[(first + s) % len] == kCorner) {
      if (run > q - 4)
        throw ComplementUndefined(std::to_string(run) + " tails between corners exceed q-4 = " +
                                  std::to_string(q - 4));
      layout.j.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  return layout;
}

BoundarySequence q_complement(const BoundarySequence& a, int q) {
  RingLayout layout = layout_from_sequence(a, q);
  return canonical_seq(sequence_from_word(layout.outer_word()));
}

bool is_self_complemented(const BoundarySequence& a, int q) {
  return canonical_seq(a) == q_complement(a, q);
}

std::vector<BoundarySequence> generate_feasible(int n, int q) {
  if (n < 2) throw ParameterError("generate_feasible needs n >= 2");
  if (q < 5) throw ParameterError("generate_feasible needs q >= 5");
  std::vector<BoundarySequence> out;
  const int k_max = (q - 4) * n / 2;
  for (int k = 1; k <= k_max; ++k)
    for_each_bracelet(k, n, n, [&](const std::vector<int>& a) { out.emplace_back(a); });
  return out;
}

double composition_count(int k, int n, int max_entry) {
  if (k < 0 || n < 0) return 0;
  std::vector<double> ways(n + 1, 0.0);
  ways[0] = 1;
  for (int part = 0; part < k; ++part) {
    std::vector<double> next(n + 1, 0.0);
    for (int s = 0; s <= n; ++s) {
      if (ways[s] == 0) continue;
      for (int v = 0; v <= max_entry && s + v <= n; ++v) next[s + v] += ways[s];
    }
    ways.swap(next);
  }
  return ways[n];
}

}  // namespace ringmap
