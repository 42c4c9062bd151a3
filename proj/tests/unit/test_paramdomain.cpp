#include <doctest.h>

#include "ringmap/errors.hpp"
#include "ringmap/paramdomain.hpp"

using namespace ringmap;
using V = Admissibility::Verdict;

TEST_CASE("admissible examples") {
  auto a = admissible(7, 5, 28);
  CHECK(a.verdict == V::Admissible);
  CHECK(a.excess == 0);
  CHECK(admissible(7, 5, 27).verdict == V::Inadmissible);
  CHECK(admissible(6, 5, 12).verdict == V::AdmissibleUnconstrained);
  CHECK(admissible(5, 7, 5).excess == 15);
  CHECK(admissible(3, 6, 2).excess == 0);
  CHECK(admissible(4, 4, 4).excess == 0);
  CHECK(admissible(5, 6, 10).excess == 0);
  CHECK(admissible(7, 5, 30).excess == 2);
  CHECK_THROWS_AS(admissible(2, 5, 5), ParameterError);
  CHECK_THROWS_AS(admissible(5, 3, 5), ParameterError);
  CHECK_THROWS_AS(admissible(5, 5, 1), ParameterError);
}

TEST_CASE("excess satisfies the ring relation") {
  for (int p = 3; p <= 12; ++p)
    for (int q = 4; q <= 12; ++q)
      for (int n = 2; n <= 60; ++n) {
        auto a = admissible(p, q, n);
        if (a.verdict == V::Admissible) {
          CHECK(a.excess >= 0);
          CHECK(euler_ring_residual(p, q, n, a.excess) == 0);
        }
      }
}

TEST_CASE("scan_domain shapes") {
  for (auto& e : scan_domain(7, 12, 5, 12, 50)) {
    CHECK(e.p == 7);
    CHECK(e.q == 5);
    CHECK(e.n >= 28);
  }
  for (auto& e : scan_domain(5, 5, 6, 6, 50)) CHECK(e.n <= 10);
  for (auto& e : scan_domain(4, 4, 4, 20, 50)) CHECK(e.n <= 4);
  auto p3 = scan_domain(3, 3, 4, 20, 50);
  REQUIRE(p3.size() == 2);
  CHECK((p3[0].q == 4 && p3[0].n == 3));
  CHECK((p3[1].q == 6 && p3[1].n == 2));
}

TEST_CASE("two paths n") {
  auto t = two_paths_n(7, 5);
  REQUIRE(t);
  CHECK(t->n == 28);
  CHECK(t->path_length == 8);
  t = two_paths_n(5, 7);
  REQUIRE(t);
  CHECK(t->n == 20);
  CHECK(t->path_length == 16);
  t = two_paths_n(3, 6);
  REQUIRE(t);
  CHECK(t->n == 2);
  CHECK_FALSE(two_paths_n(5, 9).has_value());
  CHECK(two_paths_n(4, 9)->n == 4);
  CHECK_FALSE(two_paths_n(4, 9)->path_length.has_value());
}

TEST_CASE("two paths n is admissible with zero excess") {
  for (int p = 3; p <= 12; ++p)
    for (int q = 4; q <= 12; ++q) {
      auto t = two_paths_n(p, q);
      if (!t || p == 6) continue;
      auto a = admissible(p, q, t->n);
      if (a.verdict == V::Inadmissible) continue;  // excluded trivial rings
      CHECK(a.verdict == V::Admissible);
      CHECK(a.excess == 0);
    }
}
