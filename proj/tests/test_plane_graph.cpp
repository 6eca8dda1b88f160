#include <doctest.h>

#include <numeric>

#include "domtri/error.h"
#include "domtri/generators.h"
#include "domtri/plane_graph.h"
#include "graphs.h"

using namespace domtri;
using testing::cycle;
using testing::hexagon_fan;

namespace {

int degree_sum(const PlaneGraph& g) {
  int s = 0;
  for (const Face& f : g.faces()) s += f.degree;
  return s;
}

}  // namespace

TEST_CASE("K4 has four triangular faces") {
  const PlaneGraph g = k4();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.face_count() == 4);
  for (const Face& f : g.faces()) CHECK(f.degree == 3);
  CHECK(classify(g).kind == GraphKind::PlanarTriangulation);
}

TEST_CASE("octahedron face structure") {
  const PlaneGraph g = octahedron();
  CHECK(g.edge_count() == 12);
  CHECK(g.face_count() == 8);
  CHECK(face_degree_histogram(g) == std::map<int, int>{{3, 8}});
  for (VertexId v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK_FALSE(g.has_edge(1, 4));
  CHECK_FALSE(g.has_edge(2, 5));
}

TEST_CASE("rotation systems are validated") {
  SUBCASE("one-sided edge") {
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{1}, {}}), Error);
  }
  SUBCASE("loop") {
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{0}}), Error);
  }
  SUBCASE("parallel edge") {
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{1, 1}, {0, 0}}), Error);
  }
  SUBCASE("unknown vertex") {
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{1}, {0, 2}}), Error);
  }
  SUBCASE("outer hint must be a face walk") {
    CHECK_THROWS_AS(PlaneGraph::from_rotations(k4().rotations(), std::vector<VertexId>{0, 1, 3, 2}), Error);
  }
  SUBCASE("exactly the two mirror embeddings of K4 have genus zero") {
    int accepted = 0;
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<std::vector<VertexId>> rot(4);
      for (VertexId v = 0; v < 4; ++v) {
        for (VertexId w = 0; w < 4; ++w)
          if (w != v) rot[v].push_back(w);
        if (mask >> v & 1) std::swap(rot[v][1], rot[v][2]);
      }
      try {
        PlaneGraph::from_rotations(rot);
        ++accepted;
      } catch (const Error&) {
      }
    }
    CHECK(accepted == 2);
  }
}

TEST_CASE("outer face resolution") {
  const PlaneGraph g = hexagon_fan();
  CHECK(g.outer_face().degree == 6);
  // No hint: the unique largest face is chosen.
  const PlaneGraph h = PlaneGraph::from_rotations(g.rotations());
  CHECK(h == g);
  const PlaneGraph t = PlaneGraph::from_rotations_with_outer_dart(g.rotations(), 0, 1);
  CHECK(t.outer_face().degree == 3);
  CHECK(t.face_of_dart(0, 1) == t.outer_face_id());
}

TEST_CASE("classification") {
  CHECK(classify(k4()).kind == GraphKind::PlanarTriangulation);
  CHECK(classify(triangle()).kind == GraphKind::PlanarTriangulation);
  const GraphClass hex = classify(hexagon_fan());
  CHECK(hex.kind == GraphKind::NearTriangulation);
  CHECK(hex.is_two_connected);
  const GraphClass c4 = classify(cycle(4));
  CHECK(c4.kind == GraphKind::ConnectedPlane);
  CHECK(c4.all_degrees_even);
  CHECK(classify(testing::path(3)).kind == GraphKind::ConnectedPlane);
  CHECK_FALSE(classify(testing::path(3)).is_two_connected);
  CHECK(classify(PlaneGraph::from_rotations({{1}, {0}, {}})).kind == GraphKind::Invalid);
  const GraphClass ico = classify(icosahedron());
  CHECK(ico.min_degree == 5);
  CHECK(ico.all_degrees_odd);
}

TEST_CASE("face degree histogram") {
  CHECK(face_degree_histogram(cycle(4)) == std::map<int, int>{{4, 2}});
  CHECK(face_degree_histogram(testing::path(3)) == std::map<int, int>{{4, 1}});
}

TEST_CASE("Euler and handshake on random triangulations") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 4 + static_cast<int>(s % 30);
    const PlaneGraph g = random_triangulation(n, Seed{s}, 3 * n);
    CAPTURE(s);
    CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
    CHECK(degree_sum(g) == 2 * g.edge_count());
    CHECK(g.edge_count() == 3 * n - 6);
    CHECK(face_degree_histogram(g) == std::map<int, int>{{3, 2 * n - 4}});
    CHECK(classify(g).kind == GraphKind::PlanarTriangulation);
  }
}

TEST_CASE("neighbourhoods") {
  const PlaneGraph g = k4();
  CHECK(closed_neighborhood(g, VertexSet{2}) == VertexSet{0, 1, 2, 3});
  CHECK(open_neighborhood(g, VertexSet{}).empty());
  CHECK(closed_neighborhood(g, VertexSet{}).empty());
  CHECK(closed_neighborhood(octahedron(), VertexSet{0, 3}) == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(neighbors(octahedron(), 0) == VertexSet{1, 2, 4, 5});
  CHECK(degree(g, 1) == 3);
  CHECK_THROWS_AS(neighbors(g, 7), Error);
}

TEST_CASE("vertex deletion") {
  const PlaneGraph oct = octahedron();
  SUBCASE("one vertex leaves a wheel") {
    const DeletionResult d = delete_vertices(oct, VertexSet{0});
    CHECK(d.graph.vertex_count() == 5);
    CHECK(d.graph.edge_count() == 8);
    CHECK(d.connected);
    CHECK(face_degree_histogram(d.graph) == std::map<int, int>{{3, 4}, {4, 1}});
    CHECK(d.graph.outer_face().degree == 4);
    REQUIRE(d.containing_face.size() == 1);
    CHECK(d.containing_face[0].second == d.graph.outer_face_id());
  }
  SUBCASE("empty set is the identity") {
    CHECK(delete_vertices(oct, VertexSet{}).graph == oct);
  }
  SUBCASE("antipodal pair leaves a 4-cycle") {
    const DeletionResult d = delete_vertices(oct, VertexSet{1, 4});
    CHECK(d.graph.vertex_count() == 4);
    CHECK(d.graph.edge_count() == 4);
    CHECK(face_degree_histogram(d.graph) == std::map<int, int>{{4, 2}});
    CHECK(d.new_to_old == std::vector<VertexId>{0, 2, 3, 5});
    CHECK(d.old_to_new[4] == -1);
    CHECK(d.containing_face[0].second != d.containing_face[1].second);
  }
  SUBCASE("an inner vertex lands in an inner face of its link") {
    const PlaneGraph g = k4();
    const DeletionResult d = delete_vertices(g, VertexSet{3});
    CHECK(d.containing_face[0].second != d.graph.outer_face_id());
    CHECK(d.graph.face(d.containing_face[0].second).degree == 3);
  }
  SUBCASE("disconnection is flagged") {
    const DeletionResult d = delete_vertices(testing::path(3), VertexSet{1});
    CHECK_FALSE(d.connected);
  }
  CHECK_THROWS_AS(delete_vertices(k4(), VertexSet{0, 1, 2, 3}), Error);
}

TEST_CASE("edge flips") {
  SUBCASE("no edge of K4 is flippable") {
    const PlaneGraph g = k4();
    for (auto [u, v] : g.edges()) {
      CHECK_FALSE(is_flippable(g, u, v));
      CHECK_THROWS_AS(flip_edge(g, u, v), Error);
    }
  }
  SUBCASE("flips keep 3n-6 edges and undo themselves") {
    const PlaneGraph g = random_triangulation(14, Seed{3}, 0);
    int flipped = 0;
    for (auto [u, v] : g.edges()) {
      if (!is_flippable(g, u, v)) continue;
      const PlaneGraph h = flip_edge(g, u, v);
      CHECK(h.edge_count() == 3 * 14 - 6);
      CHECK(classify(h).kind == GraphKind::PlanarTriangulation);
      CHECK_FALSE(h.has_edge(u, v));
      // The new diagonal joins the two apexes.
      VertexId x = -1, y = -1;
      for (auto [a, b] : h.edges())
        if (!g.has_edge(a, b)) x = a, y = b;
      REQUIRE(x >= 0);
      CHECK(flip_edge(h, x, y) == g);
      ++flipped;
    }
    CHECK(flipped > 0);
  }
  SUBCASE("outer edges are refused") {
    const PlaneGraph g = octahedron();
    const auto& o = g.outer_face().boundary;
    CHECK_THROWS_AS(flip_edge(g, o[0], o[1]), Error);
  }
}

TEST_CASE("neighbourhood structure") {
  SUBCASE("octahedron vertices see a 4-cycle") {
    const PlaneGraph g = octahedron();
    for (VertexId v = 0; v < 6; ++v) {
      const auto s = neighborhood_structure(g, v);
      CHECK(s.shape == NeighborhoodShape::SpanningCycle);
      CHECK(s.order.size() == 4);
    }
  }
  SUBCASE("K4 vertices see a triangle") {
    for (VertexId v = 0; v < 4; ++v) CHECK(neighborhood_structure(k4(), v).shape == NeighborhoodShape::SpanningCycle);
  }
  SUBCASE("hexagon rim vertex sees a path") {
    const PlaneGraph g = hexagon_fan();
    const auto s = neighborhood_structure(g, 2);
    CHECK(s.shape == NeighborhoodShape::SpanningPath);
    CHECK(s.order.size() == 3);
    CHECK(neighborhood_structure(g, 0).shape == NeighborhoodShape::SpanningPath);
  }
  SUBCASE("dichotomy on random near triangulations") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const PlaneGraph t = random_triangulation(12, Seed{s}, 30);
      const PlaneGraph g = near_triangulation_from(t, static_cast<VertexId>(s % 12));
      for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK_NOTHROW(neighborhood_structure(g, v));
    }
  }
}

TEST_CASE("faces inequality") {
  const FacesInequality c4 = check_faces_inequality(cycle(4));
  CHECK(c4.lhs == 2);
  CHECK(c4.rhs == 2);
  CHECK(c4.holds);
  const FacesInequality tri = check_faces_inequality(triangle());
  CHECK(tri.lhs == 0);
  CHECK(tri.rhs == 1);
  CHECK(tri.holds);
  const FacesInequality oct = check_faces_inequality(octahedron());
  CHECK(oct.lhs == 0);
  CHECK(oct.rhs == 4);
  CHECK(oct.strengthened_rhs == doctest::Approx(0.0));
  CHECK(oct.strengthened_holds);
  CHECK_THROWS_AS(check_faces_inequality(PlaneGraph::from_rotations({{1}, {0}, {}})), Error);
}

TEST_CASE("canonical walks") {
  const std::vector<VertexId> w{3, 1, 2};
  CHECK(canonical_walk(w) == std::vector<VertexId>{1, 2, 3});
}
