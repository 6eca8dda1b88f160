#include <doctest.h>

#include "domtri/error.h"
#include "domtri/vertex_set.h"

using namespace domtri;

TEST_CASE("vertex sets are sorted and duplicate free") {
  const VertexSet s{5, 1, 3};
  CHECK(std::vector<VertexId>(s.begin(), s.end()) == std::vector<VertexId>{1, 3, 5});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK_THROWS_AS(VertexSet({1, 1}), Error);
  CHECK_THROWS_AS(VertexSet({-1}), Error);
}

TEST_CASE("set algebra") {
  const VertexSet a{0, 1, 2, 3}, b{2, 3, 4};
  CHECK(a.united(b) == VertexSet{0, 1, 2, 3, 4});
  CHECK(a.intersected(b) == VertexSet{2, 3});
  CHECK(a.minus(b) == VertexSet{0, 1});
  CHECK(VertexSet::from_mask(0b1010) == VertexSet{1, 3});
  CHECK(VertexSet::from_flags({true, false, true}) == VertexSet{0, 2});
  CHECK(VertexSet{}.empty());
}
