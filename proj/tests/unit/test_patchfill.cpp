#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "ringmap/errors.hpp"
#include "ringmap/patchfill.hpp"

using namespace ringmap;

namespace {
BoundarySequence S(const char* text) { return BoundarySequence::parse(text); }

std::set<std::string> code_set(const std::vector<Patch>& patches) {
  std::set<std::string> out;
  for (auto& p : patches) out.insert(patch_code(p).hex());
  return out;
}
}  // namespace

TEST_CASE("fill examples") {
  auto r = fill(S("33"), 5, FillMode::Enumerate);
  CHECK(r.fillable);
  REQUIRE(r.patches.size() == 1);
  CHECK(patch_stats(r.patches[0]).f == 2);

  r = fill(S("11111"), 5, FillMode::Enumerate);
  REQUIRE(r.patches.size() == 1);
  auto st = patch_stats(r.patches[0]);
  CHECK(st.f == 6);
  CHECK(st.x == 5);
  CHECK(st.v2 == 5);
  CHECK(st.v3 == 5);
  auto g = pgon_adjacency_graph(r.patches[0]);
  CHECK(g.edges.size() == 10);  // 5-wheel

  CHECK_FALSE(fill(S("21"), 5, FillMode::Decide).fillable);
  r = fill(S("110110"), 5, FillMode::Enumerate);
  REQUIRE(r.fillable);
  for (auto& p : r.patches) CHECK(patch_stats(p).f == 8);

  r = fill(BoundarySequence::degenerate(5), 5, FillMode::Enumerate);
  REQUIRE(r.patches.size() == 1);
  CHECK(r.patches[0].faces.size() == 1);
  CHECK_FALSE(fill(BoundarySequence::degenerate(4), 5, FillMode::Decide).fillable);
}

TEST_CASE("enumerated patches validate and round trip") {
  for (const char* seq : {"33", "11111", "110110", "202020", "210210", "30103010", "20002000"}) {
    auto a = S(seq);
    auto r = fill(a, 5, FillMode::Enumerate);
    CHECK(r.fillable);
    for (auto& p : r.patches) {
      CHECK_NOTHROW(validate_patch(p));
      CHECK(canonical_seq(boundary_sequence(p)) == canonical_seq(a));
    }
  }
}

TEST_CASE("count matches labelled enumeration") {
  for (int p : {4, 5}) {
    Filler f(p);
    for (const char* seq : {"33", "2020", "11111", "110110", "2121", "1010"}) {
      auto w = word_from_sequence(S(seq));
      CHECK(f.count(w) == f.enumerate_labelled(w).size());
    }
  }
}

TEST_CASE("pivot rule does not change results") {
  FillOptions first;
  first.pivot = PivotRule::FirstArc;
  for (const char* seq : {"11111", "110110", "202020", "210210", "2121210", "30100103010010"}) {
    auto a = fill(S(seq), 5, FillMode::Enumerate);
    auto b = fill(S(seq), 5, FillMode::Enumerate, first);
    CHECK(code_set(a.patches) == code_set(b.patches));
  }
}

TEST_CASE("fill agrees with explicit patch growth oracle") {
  const std::map<int, int> face_bound{{4, 6}, {5, 12}, {6, 2}};
  for (auto [p, f_max] : face_bound) {
    auto pool = oracle::patch_pool(p, f_max);
    std::map<std::vector<int>, int> classes;
    for (auto& patch : pool) {
      auto a = boundary_sequence(patch);
      if (a.is_degenerate()) continue;
      ++classes[canonical_entries(a.entries())];
    }
    Filler filler(p);
    int fillable = 0;
    for (int k = 1; k <= 6; ++k)
      for (int n = 0; n <= 6; ++n)
        for (auto& e : oracle::naive_bracelets(k, n, n)) {
          BoundarySequence a(e);
          bool expect = classes.count(e) > 0;
          bool got = filler.decide(word_from_sequence(a));
          CHECK_MESSAGE(got == expect, "p=" << p << " seq=" << a.raw_string());
          if (expect) {
            ++fillable;
            auto r = fill(a, p, FillMode::Enumerate);
            CHECK_MESSAGE(static_cast<int>(r.patches.size()) == classes[e],
                          "p=" << p << " seq=" << a.raw_string());
          }
        }
    if (p != 6) CHECK(fillable > 0);
    for (int n = 1; n <= 8; ++n)
      CHECK(fill(BoundarySequence::degenerate(n), p, FillMode::Decide).fillable == (n == p));
  }
}

TEST_CASE("growth and sieve produce the same sequences") {
  for (int p : {3, 4, 5, 7}) {
    for (int k = 2; k <= 8; ++k)
      for (int n = 0; n <= 12; ++n) {
        SequenceQuery sieve, growth;
        sieve.source = SequenceSource::Sieve;
        growth.source = SequenceSource::Growth;
        auto a = pgonal_sequences(p, n, k, sieve);
        auto b = pgonal_sequences(p, n, k, growth);
        CHECK_MESSAGE(a == b, "p=" << p << " n=" << n << " k=" << k);
      }
  }
}

TEST_CASE("pentagonal table spot checks") {
  auto t = pentagonal_table(9);
  auto strings = [&](int k, int n) {
    std::set<std::string> out;
    for (auto& s : t[{k, n}]) out.insert(s.to_string());
    return out;
  };
  CHECK(strings(6, 6) == std::set<std::string>{"202020", "210210"});
  CHECK(strings(8, 4) == std::set<std::string>{"20002000"});
  CHECK(strings(2, 6) == std::set<std::string>{"33"});
  CHECK(strings(5, 5) == std::set<std::string>{"11111"});
}

TEST_CASE("path patches") {
  auto two = enumerate_path_patches(5, 2);
  REQUIRE(two.size() == 1);
  CHECK(canonical_seq(boundary_sequence(two[0])) == canonical_seq(S("33")));
  for (int f = 2; f <= 6; ++f) {
    auto chains = enumerate_path_patches(4, f);
    REQUIRE(chains.size() == 1);
    std::vector<int> b(f - 1, 0);
    b[0] = 2;
    std::vector<int> bb = b;
    bb.insert(bb.end(), b.begin(), b.end());
    CHECK(canonical_seq(boundary_sequence(chains[0])) == canonical_seq(BoundarySequence(bb)));
    CHECK(pgon_adjacency_graph(chains[0]).is_path());
  }
  auto sixteen = enumerate_path_patches(5, 16);
  auto want = canonical_seq(S("300100101011011300100101011011"));
  bool found = false;
  for (auto& p : sixteen) {
    CHECK(pgon_adjacency_graph(p).is_path());
    CHECK(patch_stats(p).x == 0);
    found = found || canonical_seq(boundary_sequence(p)) == want;
  }
  CHECK(found);
}

TEST_CASE("node cap surfaces as ResourceExhausted") {
  FillOptions tiny;
  tiny.node_cap = 1;
  CHECK_THROWS_AS(fill(S("30100103010010"), 5, FillMode::Decide, tiny), ResourceExhausted);
}
