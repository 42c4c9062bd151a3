#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ringmap/catalog.hpp"
#include "ringmap/errors.hpp"
#include "ringmap/patchfill.hpp"

namespace ringmap {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "FAIL";
    case ClaimStatus::Exhausted:
      return "inconclusive";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.status == ClaimStatus::Pass; });
}

bool VerificationReport::any_failed() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

int VerificationReport::exit_code() const {
  if (any_failed()) return 1;
  return all_passed() ? 0 : 2;
}

std::vector<std::pair<std::pair<int, int>, std::vector<std::string>>> reference_pentagonal_table() {
  return {
      {{2, 6}, {"33"}},
      {{3, 6}, {"222"}},
      {{4, 6}, {"2121"}},
      {{4, 7}, {"3130"}},
      {{5, 5}, {"11111"}},
      {{5, 6}, {"21120"}},
      {{5, 7}, {"30220"}},
      {{6, 2}, {"100100"}},
      {{6, 3}, {"101010"}},
      {{6, 4}, {"110110"}},
      {{6, 5}, {"201110"}},
      {{6, 6}, {"202020", "210210"}},
      {{6, 7}, {"301210"}},
      {{6, 8}, {"311300", "310310"}},
      {{7, 4}, {"2001100"}},
      {{7, 5}, {"2010200"}},
      {{7, 6}, {"2101200"}},
      {{7, 7}, {"3011200"}},
      {{7, 8}, {"3102200", "3020300"}},
      {{8, 4}, {"20002000"}},
      {{8, 6}, {"30011100", "21002100"}},
      {{8, 7}, {"30102100", "30020200"}},
      {{8, 8}, {"31012100", "30103010", "22002200"}},
      {{8, 9}, {"31113000", "31103100", "31013010"}},
      {{9, 5}, {"300011000"}},
      {{9, 6}, {"300102000", "210012000"}},
      {{9, 7}, {"301012000"}},
      {{9, 8}, {"310112000", "310021100", "301103000", "220012100"}},
      {{9, 9}, {"311022000", "310203000", "310022010", "300300300"}},
      {{9, 10}, {"311002201"}},
  };
}

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Runner {
  VerificationReport report;
  Caps caps;

  void run(const std::string& id, const std::string& statement, const std::string& expected,
           const std::function<std::pair<ClaimStatus, std::string>()>& body) {
    Claim c{id, statement, expected, "", ClaimStatus::Fail, 0};
    auto t0 = Clock::now();
    try {
      auto [status, computed] = body();
      c.status = status;
      c.computed = computed;
    } catch (const ResourceExhausted& e) {
      c.status = ClaimStatus::Exhausted;
      c.computed = e.what();
    } catch (const std::exception& e) {
      c.status = ClaimStatus::Fail;
      c.computed = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.claims.push_back(std::move(c));
  }

  Catalog enumerate(int p, int q, int n) {
    auto c = enumerate_maps(p, q, n, caps);
    if (!c.complete)
      throw ResourceExhausted("M_" + std::to_string(n) + "(" + std::to_string(p) + "," +
                              std::to_string(q) + ") partial: " + c.note);
    return c;
  }
};

std::pair<ClaimStatus, std::string> verdict(bool ok, std::string computed) {
  return {ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(computed)};
}

bool has_bb(const MapRecord& r, const std::string& b) {
  auto bb = canonical_seq(BoundarySequence::parse(b + b));
  return r.inner_seq == bb || r.outer_seq == bb;
}

std::string table_mismatches() {
  auto computed = pentagonal_table(9);
  std::map<std::pair<int, int>, std::set<BoundarySequence>> want, got;
  for (auto& [key, seqs] : reference_pentagonal_table())
    for (auto& s : seqs) want[key].insert(canonical_seq(BoundarySequence::parse(s)));
  // Ring lengths start at 2; n = 0 (e.g. 00000, a dodecahedron minus a face)
  // is outside the reference range.
  for (auto& [key, seqs] : computed)
    if (!seqs.empty() && key.second >= 2) got[key].insert(seqs.begin(), seqs.end());
  std::set<std::pair<int, int>> keys;
  for (auto& [k, v] : want) keys.insert(k);
  for (auto& [k, v] : got) keys.insert(k);
  std::vector<std::string> diffs;
  for (auto key : keys) {
    if (want[key] == got[key]) continue;
    std::vector<std::string> w, g;
    for (auto& s : want[key]) w.push_back(s.to_string());
    for (auto& s : got[key]) g.push_back(s.to_string());
    diffs.push_back("(k=" + std::to_string(key.first) + ",n=" + std::to_string(key.second) +
                    ") reference {" + join(w) + "} computed {" + join(g) + "}");
  }
  return join(diffs, "; ");
}

std::string domain_violations() {
  std::vector<std::string> bad;
  const int n_max = 40;
  for (const auto& e : scan_domain(3, 16, 4, 16, n_max)) {
    const int p = e.p, q = e.q, n = e.n;
    bool ok = true;
    if (q == 4 && n == p) ok = true;  // prisms
    else if (p >= 8) ok = false;
    else if (p == 7) ok = q == 5 && n >= 28;
    else if (p == 6) ok = q == 5 && n == 12;
    else if (p == 5 && q == 5) ok = n <= 6;
    else if (p == 5 && q == 6) ok = n <= 10;
    else if (p == 5 && q == 7) ok = n <= 20;
    else if (p == 4) ok = n <= 4;
    else if (p == 3) ok = (q == 6 && n == 2) || (q == 4 && n == 3);
    if (!ok) bad.push_back("(" + std::to_string(p) + "," + std::to_string(q) + "," +
                           std::to_string(n) + ")");
  }
  // The listed triples must be present, with (7,5) admissible for every n >= 28.
  for (int n = 28; n <= n_max; ++n)
    if (!admissible(7, 5, n).admissible()) bad.push_back("missing (7,5," + std::to_string(n) + ")");
  for (auto [p, q, n] : {std::tuple{6, 5, 12}, {3, 6, 2}, {3, 4, 3}, {5, 6, 10}, {5, 7, 20}})
    if (!admissible(p, q, n).admissible())
      bad.push_back("missing (" + std::to_string(p) + "," + std::to_string(q) + "," +
                    std::to_string(n) + ")");
  return join(bad, " ");
}

}  // namespace

VerificationReport verify_theorem(VerifyScope scope, const Caps& caps) {
  Runner r;
  r.caps = caps;

  r.run("table1", "pentagonal sequences of length k <= 9 match the reference table", "no differing cell",
        [&] {
          auto diff = table_mismatches();
          return verdict(diff.empty(), diff.empty() ? "all cells equal" : diff);
        });

  r.run("domain", "admissible triples have the stated shape", "no violation", [&] {
    auto bad = domain_violations();
    return verdict(bad.empty(), bad.empty() ? "shape holds" : bad);
  });

  r.run("dodecahedron", "M_5(5,5) and M_6(5,5) are three ring choices on the dodecahedron",
        "1,2; one underlying map", [&] {
          auto a = r.enumerate(5, 5, 5), b = r.enumerate(5, 5, 6);
          std::set<CanonicalCode> plain;
          for (auto* c : {&a, &b})
            for (auto& e : c->entries) plain.insert(canonical_code(e.assembled.map));
          std::string got = std::to_string(a.entries.size()) + "," +
                            std::to_string(b.entries.size()) + "; " +
                            std::to_string(plain.size()) + " underlying map(s)";
          return verdict(a.entries.size() == 1 && b.entries.size() == 2 && plain.size() == 1, got);
        });

  std::vector<int> fullerene_vertices;
  r.run("fullerenes-56", "M_n(5,6) counts for n = 5..10", "1,2,0,1,0,1", [&] {
    std::vector<std::string> counts;
    for (int n = 5; n <= 10; ++n) {
      auto c = r.enumerate(5, 6, n);
      counts.push_back(std::to_string(c.entries.size()));
      for (auto& e : c.entries) fullerene_vertices.push_back(e.record.V);
    }
    auto got = join(counts);
    return verdict(got == "1,2,0,1,0,1", got);
  });
  r.run("fullerenes-65", "M_12(6,5): four maps, one with two paths of hexagons", "4 maps, 1 two-paths",
        [&] {
          auto c = r.enumerate(6, 5, 12);
          int tp = 0;
          for (auto& e : c.entries) {
            tp += e.record.two_paths;
            fullerene_vertices.push_back(e.record.V);
          }
          return verdict(c.entries.size() == 4 && tp == 1,
                         std::to_string(c.entries.size()) + " maps, " + std::to_string(tp) +
                             " two-paths");
        });
  r.run("fullerene-sizes", "vertex counts of the nine fullerenes", "30,32,32,36,36,40,44,44,48", [&] {
    auto v = fullerene_vertices;
    std::sort(v.begin(), v.end());
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return verdict(join(s) == "30,32,32,36,36,40,44,44,48", join(s));
  });

  r.run("azulenoids-small", "M_n(5,7): none for n = 2..6 except one at n = 4", "0,0,1,0,0", [&] {
    std::vector<std::string> counts;
    for (int n = 2; n <= 6; ++n) counts.push_back(std::to_string(r.enumerate(5, 7, n).entries.size()));
    auto got = join(counts);
    return verdict(got == "0,0,1,0,0", got);
  });
  r.run("azulenoid-10", "an M_10(5,7) with sequence bb, b = 3010010", ">= 1, contains bb", [&] {
    auto c = r.enumerate(5, 7, 10);
    bool has = std::any_of(c.entries.begin(), c.entries.end(),
                           [](auto& e) { return has_bb(e.record, "3010010"); });
    return verdict(!c.entries.empty() && has,
                   std::to_string(c.entries.size()) + " map(s), bb " + (has ? "found" : "missing"));
  });
  r.run("azulenoid-12", "M_12(5,7) count", "4", [&] {
    auto c = r.enumerate(5, 7, 12);
    return verdict(c.entries.size() == 4, std::to_string(c.entries.size()));
  });

  r.run("small-maps", "M_2(3,6), M_3(4,6), M_2(4,8), M_3(5,8), M_2(5,10), M_4(5,8) exist and validate",
        "all exist; n=2 flagged non-polyhedral", [&] {
          std::vector<std::string> got;
          bool ok = true;
          for (auto [p, q, n] : {std::tuple{3, 6, 2}, {4, 6, 3}, {4, 8, 2}, {5, 8, 3}, {5, 10, 2},
                                 {5, 8, 4}}) {
            auto c = r.enumerate(p, q, n);
            bool flags = std::all_of(c.entries.begin(), c.entries.end(), [&](auto& e) {
              return e.record.non_polyhedral == (n == 2);
            });
            ok = ok && !c.entries.empty() && flags;
            got.push_back("M_" + std::to_string(n) + "(" + std::to_string(p) + "," +
                          std::to_string(q) + ")=" + std::to_string(c.entries.size()));
          }
          return verdict(ok, join(got, " "));
        });

  r.run("constructions", "prisms, decorated prisms and the M_4(5,5t+2), M_4(5,5t+3) series validate",
        "all valid", [&] {
          std::vector<std::string> bad;
          for (int p = 3; p <= 12; ++p) {
            auto m = prism(p);
            make_record(m.map, m.ring, p, 4);
          }
          for (int q = 4; q <= 12; ++q) {
            auto m = decorate_prism(q);
            auto rec = make_record(m.map, m.ring, 4, q);
            if (!rec.self_complementary) bad.push_back("decorate_prism(" + std::to_string(q) + ")");
          }
          for (int t = 1; t <= 4; ++t)
            for (auto v : {FulleroidVariant::Q5t2, FulleroidVariant::Q5t3}) {
              int q = v == FulleroidVariant::Q5t3 ? 5 * t + 3 : 5 * t + 2;
              auto m = fulleroid_M45(t, v);
              auto rec = make_record(m.map, m.ring, 5, q);
              if (!is_self_complemented(fulleroid_sequence(t, v), q) ||
                  rec.inner_seq != rec.outer_seq)
                bad.push_back("fulleroid q=" + std::to_string(q));
            }
          return verdict(bad.empty(), bad.empty() ? "all valid" : join(bad, " "));
        });
  r.run("no-M4(5,9)", "M_4(5,9) does not exist", "0", [&] {
    auto c = r.enumerate(5, 9, 4);
    return verdict(c.entries.empty(), std::to_string(c.entries.size()));
  });
  r.run("M4(4,9)-exists", "M_4(4,9) exists, so the stated non-existence can only mean M_4(5,9)",
        ">= 1", [&] {
          auto c = r.enumerate(4, 9, 4);
          return verdict(!c.entries.empty(), std::to_string(c.entries.size()));
        });

  if (scope == VerifyScope::Full) {
    r.run("azulenoid-16", "M_16(5,7) count", "2", [&] {
      auto c = r.enumerate(5, 7, 16);
      return verdict(c.entries.size() == 2, std::to_string(c.entries.size()));
    });
    r.run("azulenoid-20", "M_20(5,7) is unique with bb, b = 300100101011011, and two paths",
          "1 map, aut 4, bb, I=O, paths of 16", [&] {
            auto c = r.enumerate(5, 7, 20);
            if (c.entries.size() != 1)
              return verdict(false, std::to_string(c.entries.size()) + " maps");
            auto& rec = c.entries[0].record;
            bool ok = rec.aut_order == 4 && has_bb(rec, "300100101011011") &&
                      rec.self_complementary && rec.two_paths && rec.F - rec.n == 32;
            std::ostringstream s;
            s << "1 map, aut " << rec.aut_order << ", inner " << rec.inner_seq.to_string()
              << (rec.self_complementary ? ", I=O" : ", I!=O")
              << (rec.two_paths ? ", two paths" : "");
            return verdict(ok, s.str());
          });
    r.run("azulenoid-28", "M_28(7,5) is unique with two paths of 8 heptagons", "1 map, two paths",
          [&] {
            auto c = r.enumerate(7, 5, 28);
            bool ok = c.entries.size() == 1 && c.entries[0].record.two_paths &&
                      c.entries[0].record.F - 28 == 16;
            return verdict(ok, std::to_string(c.entries.size()) + " map(s)" +
                                   (ok ? ", two paths" : ""));
          });
    r.run("two-paths", "maps with x+x'=0 and two paths for p, q <= 12",
          "M_2(3,6), M_10(5,6), M_20(5,7), one M_12(6,5), M_28(7,5), prisms, M_4(4,q)", [&] {
            std::vector<std::string> got, bad;
            for (int p = 3; p <= 12; ++p)
              for (int q = 4; q <= 12; ++q) {
                auto shape = two_paths_n(p, q);
                if (!shape || shape->n < 2) continue;
                auto c = r.enumerate(p, q, shape->n);
                int tp = 0;
                for (auto& e : c.entries) tp += e.record.two_paths;
                std::string cell = "M_" + std::to_string(shape->n) + "(" + std::to_string(p) +
                                   "," + std::to_string(q) + ")";
                if (tp > 0) got.push_back(cell + "x" + std::to_string(tp));
                if (tp != 1) bad.push_back(cell + " has " + std::to_string(tp));
                // The family members are the constructions themselves.
                if (tp == 1 && (q == 4 || p == 4)) {
                  auto ref = q == 4 ? prism(p) : decorate_prism(q);
                  auto code = canonical_form(ref.map, ref.ring_marks()).code;
                  bool match = std::any_of(c.entries.begin(), c.entries.end(), [&](auto& e) {
                    return e.record.two_paths && e.record.canonical == code;
                  });
                  if (!match) bad.push_back(cell + " is not the construction");
                }
              }
            std::set<std::string> sporadic{"M_2(3,6)x1", "M_10(5,6)x1", "M_20(5,7)x1",
                                           "M_12(6,5)x1", "M_28(7,5)x1"};
            for (auto& s : sporadic)
              if (std::find(got.begin(), got.end(), s) == got.end()) bad.push_back("missing " + s);
            return verdict(bad.empty(), bad.empty() ? join(got, " ") : join(bad, "; "));
          });
  }
  return r.report;
}

std::vector<ExploreResult> explore_open(int p, int q, int n_min, int n_max, const Caps& caps) {
  std::vector<ExploreResult> out;
  for (int n = n_min; n <= n_max; ++n) {
    ExploreResult e{p, q, n, admissible(p, q, n), false, 0, "", "", 0};
    if (!e.admissibility.admissible()) {
      e.complete = true;
      e.verdict = "inadmissible";
      e.note = e.admissibility.to_string();
      out.push_back(e);
      continue;
    }
    auto c = enumerate_maps(p, q, n, caps);
    e.complete = c.complete;
    e.count = c.entries.size();
    e.seconds = c.seconds;
    e.note = c.note;
    if (!c.complete)
      e.verdict = c.entries.empty() ? "inconclusive" : "exists (partial count)";
    else
      e.verdict = c.entries.empty() ? "none" : "exists";
    out.push_back(e);
  }
  return out;
}

}  // namespace ringmap
