// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.
// Every comparison is exact; runtimes are checked against the stated budgets.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ringmap/catalog.hpp"
#include "ringmap/errors.hpp"
#include "ringmap/patchfill.hpp"

using namespace ringmap;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("error: ") + e.what()};
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!out.ok) ++failures;
  std::printf("[%s] %2d %s (%.1fs): %s\n", out.ok ? "PASS" : "FAIL", id, name, s,
              out.detail.c_str());
  std::fflush(stdout);
}

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cell(int p, int q, int n) {
  return "M_" + std::to_string(n) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// Enumerates and enforces a wall-clock budget in seconds.
struct Timed {
  Catalog cat;
  double seconds = 0;
};

Timed run(int p, int q, int n, double budget) {
  Caps caps;
  caps.seconds = budget;
  auto t0 = Clock::now();
  auto c = enumerate_maps(p, q, n, caps);
  if (!c.complete) throw ResourceExhausted(cell(p, q, n) + " partial: " + c.note);
  return {std::move(c), elapsed(t0)};
}

bool has_bb(const MapRecord& r, const std::string& b) {
  auto bb = canonical_seq(BoundarySequence::parse(b + b));
  return r.inner_seq == bb || r.outer_seq == bb;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

int main() {
  criterion(1, "pentagonal table reproduction", [] {
    auto t0 = Clock::now();
    auto computed = pentagonal_table(9);
    double s = elapsed(t0);
    std::map<std::pair<int, int>, std::set<BoundarySequence>> want, got;
    for (auto& [key, seqs] : reference_pentagonal_table())
      for (auto& x : seqs) want[key].insert(canonical_seq(BoundarySequence::parse(x)));
    // The reference table starts at n = 2.
    for (auto& [key, seqs] : computed)
      if (!seqs.empty() && key.second >= 2) got[key].insert(seqs.begin(), seqs.end());
    std::set<std::pair<int, int>> keys;
    for (auto& kv : want) keys.insert(kv.first);
    for (auto& kv : got) keys.insert(kv.first);
    std::vector<std::string> diffs;
    for (auto key : keys) {
      if (want[key] == got[key]) continue;
      std::vector<std::string> extra, missing;
      for (auto& x : got[key])
        if (!want[key].count(x)) extra.push_back(x.to_string());
      for (auto& x : want[key])
        if (!got[key].count(x)) missing.push_back(x.to_string());
      diffs.push_back("(k=" + std::to_string(key.first) + ",n=" + std::to_string(key.second) +
                      ") extra {" + join(extra) + "} missing {" + join(missing) + "}");
    }
    bool ok = diffs.empty() && s <= 120;
    return Outcome{ok, std::to_string(keys.size()) + " cells, " +
                           (diffs.empty() ? "all equal" : join(diffs, "; "))};
  });

  criterion(2, "parameter domain", [] {
    auto t0 = Clock::now();
    std::vector<std::string> bad;
    for (const auto& e : scan_domain(3, 16, 4, 16, 40)) {
      const int p = e.p, q = e.q, n = e.n;
      bool ok;
      if (q == 4 && n == p) ok = true;  // prism family
      else if (p >= 8) ok = false;
      else if (p == 7) ok = q == 5 && n >= 28;
      else if (p == 6) ok = q == 5 && n == 12;
      else if (p == 5 && q == 6) ok = n <= 10;
      else if (p == 5 && q == 7) ok = n <= 20;
      else if (p == 4) ok = n <= 4;
      else if (p == 3) ok = (q == 6 && n == 2) || (q == 4 && n == 3);
      else ok = true;
      if (!ok) bad.push_back(cell(p, q, n));
    }
    for (int n = 28; n <= 40; ++n)
      if (!admissible(7, 5, n).admissible()) bad.push_back("missing " + cell(7, 5, n));
    for (auto [p, q, n] : {std::tuple{6, 5, 12}, {3, 6, 2}, {3, 4, 3}, {5, 6, 10}, {5, 7, 20}})
      if (!admissible(p, q, n).admissible()) bad.push_back("missing " + cell(p, q, n));
    double s = elapsed(t0);
    return Outcome{bad.empty() && s < 1, bad.empty() ? "shape holds" : join(bad, " ")};
  });

  std::vector<int> fullerene_v;
  criterion(3, "map counts", [&] {
    std::vector<std::string> bad, lines;
    auto counts = [&](int p, int q, std::vector<int> ns, std::vector<std::size_t> want) {
      std::vector<std::string> got;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        double budget = ns[i] <= 12 ? 300 : 1800;
        auto t = run(p, q, ns[i], budget);
        got.push_back(std::to_string(t.cat.entries.size()));
        if (t.cat.entries.size() != want[i])
          bad.push_back(cell(p, q, ns[i]) + "=" + got.back() + " want " + std::to_string(want[i]));
        if (t.seconds > budget) bad.push_back(cell(p, q, ns[i]) + " over budget");
        if ((p == 5 && q == 6) || (p == 6 && q == 5))
          for (auto& e : t.cat.entries) fullerene_v.push_back(e.record.V);
      }
      lines.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")=" + join(got));
    };
    counts(5, 5, {5, 6}, {1, 2});
    {
      std::set<CanonicalCode> plain;
      for (int n : {5, 6})
        for (auto& e : run(5, 5, n, 300).cat.entries) plain.insert(canonical_code(e.assembled.map));
      if (plain.size() != 1) bad.push_back("(5,5) spans " + std::to_string(plain.size()) + " maps");
    }
    counts(5, 6, {5, 6, 7, 8, 9, 10}, {1, 2, 0, 1, 0, 1});
    {
      auto t = run(6, 5, 12, 300);
      int tp = 0;
      for (auto& e : t.cat.entries) {
        tp += e.record.two_paths;
        fullerene_v.push_back(e.record.V);
      }
      lines.push_back("(6,5,12)=" + std::to_string(t.cat.entries.size()) + " tp=" +
                      std::to_string(tp));
      if (t.cat.entries.size() != 4 || tp != 1) bad.push_back("M_12(6,5)");
    }
    counts(5, 7, {2, 3, 4, 5, 6, 12, 16, 20}, {0, 0, 1, 0, 0, 4, 2, 1});
    {
      auto t = run(5, 7, 10, 300);
      bool found = std::any_of(t.cat.entries.begin(), t.cat.entries.end(),
                               [](auto& e) { return has_bb(e.record, "3010010"); });
      lines.push_back("(5,7,10)=" + std::to_string(t.cat.entries.size()) +
                      (found ? " with bb" : " without bb"));
      if (t.cat.entries.empty() || !found) bad.push_back("M_10(5,7) bb");
    }
    std::string detail = join(lines, " ");
    if (!bad.empty()) detail += " | mismatch: " + join(bad, "; ");
    return Outcome{bad.empty(), detail};
  });

  criterion(4, "M_28(7,5)", [] {
    auto t = run(7, 5, 28, 600);
    auto& es = t.cat.entries;
    bool ok = es.size() == 1 && es[0].record.x_inner + es[0].record.x_outer == 0 &&
              es[0].record.two_paths && es[0].record.F - 28 == 16 && t.seconds <= 600;
    std::ostringstream s;
    s << es.size() << " map(s)";
    if (!es.empty())
      s << ", x+x'=" << es[0].record.x_inner + es[0].record.x_outer
        << (es[0].record.two_paths ? ", two paths of " : ", heptagons ")
        << (es[0].record.F - 28) / 2 << " each";
    return Outcome{ok, s.str()};
  });

  criterion(5, "M_20(5,7) uniqueness", [] {
    auto t = run(5, 7, 20, 1800);
    std::vector<std::string> maps;
    bool paper_map = false;
    for (auto& e : t.cat.entries) {
      auto& r = e.record;
      bool match = r.aut_order == 4 && has_bb(r, "300100101011011") && r.self_complementary &&
                   r.two_paths && r.F - r.n == 32;
      paper_map = paper_map || match;
      maps.push_back("aut " + std::to_string(r.aut_order) + " inner " + r.inner_seq.to_string() +
                     (r.self_complementary ? " I=O" : " I!=O") + (r.two_paths ? " two-paths" : ""));
    }
    bool ok = t.cat.entries.size() == 1 && paper_map;
    return Outcome{ok, std::to_string(maps.size()) + " map(s): " + join(maps, "; ")};
  });

  criterion(6, "small maps", [] {
    std::vector<std::string> got;
    bool ok = true;
    for (auto [p, q, n] : {std::tuple{3, 6, 2}, {4, 6, 3}, {4, 8, 2}, {5, 8, 3}, {5, 10, 2},
                           {5, 8, 4}}) {
      auto t = run(p, q, n, 300);
      for (auto& e : t.cat.entries) {
        ok = ok && e.record.non_polyhedral == (n == 2);
        ok = ok && euler_check(e.assembled.map, p, q, n, e.assembled.ring).ok();
        if (p != q) ok = ok && ring_of(e.assembled.map, q).faces.size() == std::size_t(n);
      }
      ok = ok && !t.cat.entries.empty();
      got.push_back(cell(p, q, n) + "=" + std::to_string(t.cat.entries.size()));
    }
    return Outcome{ok, join(got, " ")};
  });

  criterion(7, "constructions", [] {
    std::vector<std::string> bad;
    auto check = [&](const AssembledMap& m, int p, int q, const std::string& name) {
      const int n = static_cast<int>(m.ring.size());
      if (!euler_check(m.map, p, q, n, m.ring).ok()) bad.push_back(name + " euler");
      if (p != q && ring_of(m.map, q).faces.size() != std::size_t(n)) bad.push_back(name + " ring");
      return make_record(m.map, m.ring, p, q);
    };
    for (int p = 3; p <= 12; ++p) check(prism(p), p, 4, "prism(" + std::to_string(p) + ")");
    for (int q = 4; q <= 12; ++q) check(decorate_prism(q), 4, q, "decorate_prism(" + std::to_string(q) + ")");
    int fulleroids = 0;
    for (int t = 1; t <= 4; ++t)
      for (auto v : {FulleroidVariant::Q5t2, FulleroidVariant::Q5t3}) {
        int q = v == FulleroidVariant::Q5t3 ? 5 * t + 3 : 5 * t + 2;
        std::string name = "fulleroid(t=" + std::to_string(t) + ",q=" + std::to_string(q) + ")";
        auto r = check(fulleroid_M45(t, v), 5, q, name);
        if (!is_self_complemented(fulleroid_sequence(t, v), q) || r.inner_seq != r.outer_seq)
          bad.push_back(name + " not self-complemented");
        ++fulleroids;
      }
    auto none = run(5, 9, 4, 300).cat.entries.size();
    if (none != 0) bad.push_back("M_4(5,9)=" + std::to_string(none));
    return Outcome{bad.empty(), "10 prisms, 9 decorated prisms, " + std::to_string(fulleroids) +
                                    " fulleroids, M_4(5,9)=" + std::to_string(none) +
                                    (bad.empty() ? "" : " | " + join(bad, "; "))};
  });

  criterion(8, "fullerene cross-check", [&] {
    auto v = fullerene_v;
    std::sort(v.begin(), v.end());
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return Outcome{join(s) == "30,32,32,36,36,40,44,44,48", "{" + join(s) + "}"};
  });

  criterion(9, "two-paths census", [] {
    std::vector<std::string> got, bad;
    for (int p = 3; p <= 12; ++p)
      for (int q = 4; q <= 12; ++q) {
        auto shape = two_paths_n(p, q);
        if (!shape || shape->n < 2) continue;
        auto t = run(p, q, shape->n, 1800);
        int tp = 0;
        for (auto& e : t.cat.entries) tp += e.record.two_paths;
        std::string name = cell(p, q, shape->n);
        if (tp > 0) got.push_back(name + "x" + std::to_string(tp));
        if (tp != 1) bad.push_back(name + " has " + std::to_string(tp));
        if (tp == 1 && (p == 4 || q == 4)) {
          auto ref = q == 4 ? prism(p) : decorate_prism(q);
          auto code = canonical_form(ref.map, ref.ring_marks()).code;
          bool match = std::any_of(t.cat.entries.begin(), t.cat.entries.end(), [&](auto& e) {
            return e.record.two_paths && e.record.canonical == code;
          });
          if (!match) bad.push_back(name + " is not the family member");
        }
      }
    for (const char* s : {"M_2(3,6)x1", "M_10(5,6)x1", "M_20(5,7)x1", "M_12(6,5)x1", "M_28(7,5)x1"})
      if (std::find(got.begin(), got.end(), s) == got.end()) bad.push_back(std::string("missing ") + s);
    return Outcome{bad.empty(), std::to_string(got.size()) + " cells with two-paths maps" +
                                    (bad.empty() ? "" : " | " + join(bad, "; "))};
  });

  criterion(10, "property suites", [] {
    std::vector<std::string> bad;

    // Complement involution, sum and length identities.
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      int q = 5 + static_cast<int>(rng() % 6);
      int k = 1 + static_cast<int>(rng() % 12);
      std::vector<int> e(k);
      for (auto& v : e) v = static_cast<int>(rng() % 4);
      if (std::accumulate(e.begin(), e.end(), 0) == 0) e[0] = 1;
      BoundarySequence a(e), c;
      try {
        c = q_complement(a, q);
      } catch (const ComplementUndefined&) {
        continue;
      }
      ++checked;
      bool ok = c.sum() == a.sum() && a.length() + c.length() == (q - 4) * a.sum();
      if (!c.is_degenerate()) ok = ok && q_complement(c, q) == canonical_seq(a);
      if (!ok) {
        bad.push_back("complement " + a.raw_string() + " q=" + std::to_string(q));
        break;
      }
    }

    // Relabeling invariance on 20 catalog maps.
    std::vector<AssembledMap> maps;
    for (auto [p, q, n] : {std::tuple{5, 5, 6}, {5, 6, 6}, {6, 5, 12}, {5, 7, 12}, {5, 7, 16},
                           {3, 6, 2}, {5, 8, 4}, {4, 9, 4}})
      for (auto& e : run(p, q, n, 300).cat.entries)
        if (maps.size() < 20) maps.push_back(e.assembled);
    for (int p = 3; maps.size() < 20; ++p) maps.push_back(prism(p));
    for (auto& m : maps) {
      auto code = canonical_form(m.map, m.ring_marks()).code;
      std::vector<int> perm(m.map.num_darts());
      for (int t = 0; t < 100; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto r = m.map.relabeled(perm);
        FaceMarks marks(r.num_faces(), 0);
        for (int f : m.ring) marks[r.face_of(perm[m.map.face_dart(f)])] = 1;
        if (canonical_form(r, marks).code != code) {
          bad.push_back("relabel changed a code");
          break;
        }
      }
    }

    // Fill against the explicit patch-growth oracle.
    const std::map<int, int> face_bound{{4, 6}, {5, 12}, {6, 2}};
    int fill_checked = 0;
    for (auto [p, f_max] : face_bound) {
      std::map<std::vector<int>, int> classes;
      for (auto& patch : oracle::patch_pool(p, f_max)) {
        auto a = boundary_sequence(patch);
        if (!a.is_degenerate()) ++classes[canonical_entries(a.entries())];
      }
      Filler filler(p);
      for (int k = 1; k <= 6; ++k)
        for (int n = 0; n <= 6; ++n)
          for (auto& e : oracle::naive_bracelets(k, n, n)) {
            BoundarySequence a(e);
            ++fill_checked;
            bool expect = classes.count(e) > 0;
            if (filler.decide(word_from_sequence(a)) != expect) {
              bad.push_back("fill p=" + std::to_string(p) + " " + a.raw_string());
              continue;
            }
            if (expect && fill(a, p, FillMode::Enumerate).patches.size() != std::size_t(classes[e]))
              bad.push_back("fill count p=" + std::to_string(p) + " " + a.raw_string());
          }
    }

    // Enumeration against the brute-force ring map generator.
    struct Case {
      int p, q, n, f_max;
    };
    for (auto c : {Case{5, 5, 6, 6}, Case{5, 6, 5, 11}, Case{5, 6, 6, 12}, Case{4, 6, 3, 6},
                   Case{3, 6, 2, 4}}) {
      std::set<std::string> mine;
      for (auto& e : run(c.p, c.q, c.n, 300).cat.entries) mine.insert(e.record.canonical.hex());
      if (mine != oracle::brute_ring_maps(c.p, c.q, c.n, c.f_max))
        bad.push_back("brute " + cell(c.p, c.q, c.n));
    }

    std::ostringstream s;
    s << checked << " complements, " << maps.size() << "x100 relabels, " << fill_checked
      << " fill cases, 5 brute instances";
    if (!bad.empty()) s << " | " << join(bad, "; ");
    return Outcome{bad.empty(), s.str()};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
