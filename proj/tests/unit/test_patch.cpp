#include <doctest.h>

#include "ringmap/errors.hpp"
#include "ringmap/patch.hpp"

using namespace ringmap;

namespace {

Patch two_pentagons() {
  Patch p;
  p.p = 5;
  p.num_vertices = 8;
  p.faces = {{0, 1, 2, 3, 4}, {1, 0, 5, 6, 7}};
  p.boundary = {1, 2, 3, 4, 0, 5, 6, 7};
  return p;
}

Patch single(int p) {
  Patch patch;
  patch.p = p;
  patch.num_vertices = p;
  patch.faces.emplace_back();
  for (int i = 0; i < p; ++i) patch.faces[0].push_back(i);
  patch.boundary = patch.faces[0];
  return patch;
}

}  // namespace

TEST_CASE("two pentagons sharing an edge") {
  auto p = two_pentagons();
  CHECK_NOTHROW(validate_patch(p));
  CHECK(boundary_sequence(p) == BoundarySequence::parse("33"));
  auto s = patch_stats(p);
  CHECK(s.v2 == 6);
  CHECK(s.v3 == 2);
  CHECK(s.x == 0);
  CHECK(s.f == 2);
  auto g = pgon_adjacency_graph(p);
  CHECK(g.num_vertices == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.is_path());
}

TEST_CASE("single p-gon") {
  for (int p = 3; p <= 8; ++p) {
    auto patch = single(p);
    CHECK_NOTHROW(validate_patch(patch));
    CHECK(boundary_sequence(patch).is_degenerate());
    CHECK(boundary_sequence(patch).sum() == p);
    auto s = patch_stats(patch);
    CHECK(s.v2 == p);
    CHECK(s.v3 == 0);
    CHECK(s.x == 0);
    CHECK(s.f == 1);
  }
}

TEST_CASE("validation catches broken patches") {
  auto p = two_pentagons();
  p.p = 6;
  CHECK_THROWS_AS(validate_patch(p), StructuralError);
  auto q = two_pentagons();
  q.boundary = {1, 2, 3};
  CHECK_THROWS(validate_patch(q));
}

TEST_CASE("patch code distinguishes boundary") {
  CHECK(patch_code(two_pentagons()) == patch_code(two_pentagons()));
  CHECK(patch_code(single(5)) != patch_code(two_pentagons()));
}

TEST_CASE("euler profile") {
  auto w = word_from_sequence(BoundarySequence::parse("11111"));
  auto prof = euler_profile(5, w);
  REQUIRE(prof);
  CHECK(prof->x == 5);
  CHECK(prof->f == 6);
  CHECK_FALSE(euler_profile(5, word_from_sequence(BoundarySequence::parse("555"))));
  // Hexagons: a chain of two hexagons has boundary 4,4 and area two.
  auto hex = euler_profile(6, word_from_sequence(BoundarySequence::parse("44")));
  REQUIRE(hex);
  CHECK(hex->f == 2);
  CHECK(hex->x == 0);
  // Coronene: one hexagon ringed by six.
  auto cor = euler_profile(6, word_from_sequence(BoundarySequence::parse("222222")));
  REQUIRE(cor);
  CHECK(cor->f == 7);
  CHECK(cor->x == 6);
  CHECK_FALSE(euler_profile(6, word_from_sequence(BoundarySequence::parse("3333"))));
}
