#include <doctest.h>

#include <algorithm>

#include "domtri/domination.h"
#include "domtri/error.h"
#include "domtri/generators.h"
#include "domtri/trace_io.h"

using namespace domtri;


TEST_CASE("fixed solids") {
  CHECK(triangle().vertex_count() == 3);
  CHECK(k4().edge_count() == 6);
  const PlaneGraph oct = octahedron();
  CHECK(oct.vertex_count() == 6);
  CHECK(oct.edge_count() == 12);
  const PlaneGraph ico = icosahedron();
  CHECK(ico.vertex_count() == 12);
  CHECK(ico.edge_count() == 30);
  CHECK(classify(ico).min_degree == 5);
  CHECK(classify(ico).kind == GraphKind::PlanarTriangulation);
}

TEST_CASE("seeds") {
  const Seed s{42};
  CHECK(s.derive(1) == s.derive(1));
  CHECK_FALSE(s.derive(1) == s.derive(2));
  CHECK_FALSE(s.derive(0) == s);
}

TEST_CASE("planar 3-trees") {
  CHECK(planar_three_tree(3, Seed{1}).graph == triangle());
  for (std::uint64_t s = 0; s < 8; ++s) {
    const PlaneGraph g = planar_three_tree(4, Seed{s}).graph;
    CHECK(g.edge_count() == 6);
    CHECK(classify(g).kind == GraphKind::PlanarTriangulation);
  }
  const Generated g10 = planar_three_tree(10, Seed{7});
  CHECK(classify(g10.graph).kind == GraphKind::PlanarTriangulation);
  CHECK(g10.graph.edge_count() == 24);
  CHECK(g10.trace.steps.size() == 7);
  CHECK(replay(g10.trace) == g10.graph);
  CHECK(planar_three_tree(25, Seed{9}).graph == planar_three_tree(25, Seed{9}).graph);
  CHECK_THROWS_AS(planar_three_tree(2, Seed{0}), Error);
}

TEST_CASE("recursive Eulerian triangulations") {
  CHECK(recursive_eulerian(0, Seed{5}).graph == triangle());
  for (std::uint64_t s = 0; s < 4; ++s) {
    // Relabelled octahedra: six vertices of degree 4.
    const PlaneGraph g = recursive_eulerian(1, Seed{s}).graph;
    CHECK(g.vertex_count() == 6);
    for (VertexId v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
  }
  for (int t = 0; t <= 8; ++t)
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Generated gen = recursive_eulerian(t, Seed{s});
      CAPTURE(t);
      CAPTURE(s);
      CHECK(gen.graph.vertex_count() == 3 + 3 * t);
      CHECK(replay(gen.trace) == gen.graph);
      CHECK(classify(gen.graph).all_degrees_even);
      CHECK(classify(gen.graph).kind == GraphKind::PlanarTriangulation);
      if (gen.graph.vertex_count() >= 9) {
        const Degree4Structure d4 = degree4_structure(gen.graph);
        CHECK(d4.all_small_cliques);
        CHECK(d4.max_per_face <= 3);
      }
      for (const BuildStep& step : gen.trace.steps)
        for (auto [a, x] : opposite_pairs(step)) CHECK_FALSE(gen.graph.has_edge(a, x));
    }
}

TEST_CASE("degree-4 vertices need not form triangles") {
  // Octahedron, then a triangle into a face holding two vertices of the
  // first inserted triangle: its third vertex keeps degree 4 alone.
  BuildTrace trace{TraceKind::Eulerian, {}};
  trace.steps.push_back({{0, 1, 2}, {3, 4, 5}});
  trace.steps.push_back({{0, 1, 5}, {6, 7, 8}});
  // After the second step, (0, 8, 7) is a face containing 7 and 8 of the new triangle.
  trace.steps.push_back({{0, 8, 7}, {9, 10, 11}});
  const PlaneGraph g = replay(trace);
  CHECK(classify(g).kind == GraphKind::PlanarTriangulation);
  const Degree4Structure d4 = degree4_structure(g);
  CHECK_FALSE(d4.all_triangles);
  CHECK(d4.all_small_cliques);
  CHECK(d4.max_per_face <= 3);
  CHECK(std::find(d4.components.begin(), d4.components.end(), VertexSet{6}) != d4.components.end());
}

TEST_CASE("diamond chains") {
  for (int k = 2; k <= 6; ++k) {
    const PlaneGraph g = diamond_chain(k);
    CAPTURE(k);
    CHECK(g.vertex_count() == 7 * k);
    CHECK(g.edge_count() == 3 * 7 * k - 6);
    CHECK(classify(g).kind == GraphKind::PlanarTriangulation);
    const VertexSet w = diamond_chain_witness(k);
    CHECK(w.size() == static_cast<std::size_t>(2 * k));
    CHECK(is_independent(g, w));
    CHECK(is_dominating(g, w));
  }
  CHECK(diamond_chain(3).edge_count() == 57);
  CHECK_THROWS_AS(diamond_chain(1), Error);
}

TEST_CASE("K4 chains") {
  for (int k = 2; k <= 6; ++k) {
    const PlaneGraph g = k4_chain(k);
    CHECK(g.vertex_count() == 4 * k);
    CHECK(classify(g).kind == GraphKind::PlanarTriangulation);
  }
  CHECK_THROWS_AS(k4_chain(1), Error);
}

TEST_CASE("random triangulations") {
  const PlaneGraph a = random_triangulation(12, Seed{1}, 100);
  CHECK(a.edge_count() == 30);
  CHECK(a == random_triangulation(12, Seed{1}, 100));
  CHECK(random_triangulation(15, Seed{4}, 0) == planar_three_tree(15, Seed{4}).graph);
}

TEST_CASE("near triangulations") {
  const PlaneGraph w = near_triangulation_from(octahedron(), 0);
  CHECK(w.vertex_count() == 5);
  CHECK(w.outer_face().degree == 4);
  CHECK(classify(w).kind == GraphKind::NearTriangulation);
  CHECK(near_triangulation_from(icosahedron(), 3).outer_face().degree == 5);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PlaneGraph t = random_triangulation(15, Seed{s}, 40);
    for (VertexId v = 0; v < 15; v += 4) {
      const PlaneGraph g = near_triangulation_from(t, v);
      CHECK(classify(g).is_near_triangulation());
      CHECK(g.outer_face().degree == t.degree(v));
      if (t.degree(v) >= 4) CHECK(classify(g).kind == GraphKind::NearTriangulation);
    }
  }
  CHECK_THROWS_AS(near_triangulation_from(k4(), 0), Error);
}

TEST_CASE("minimum degree five sampling") {
  CHECK(min_degree5_sample(12, Seed{0}, 5) == icosahedron());
  CHECK_FALSE(min_degree5_sample(11, Seed{0}, 20).has_value());
  CHECK_FALSE(min_degree5_sample(13, Seed{0}, 3).has_value());
  int found = 0;
  for (int n : {14, 16, 20, 24}) {
    const auto g = min_degree5_sample(n, Seed{static_cast<std::uint64_t>(n)}, 30);
    if (!g) continue;
    ++found;
    CHECK(g->vertex_count() == n);
    CHECK(classify(*g).min_degree == 5);
    CHECK(classify(*g).kind == GraphKind::PlanarTriangulation);
  }
  CHECK(found >= 2);
}

TEST_CASE("all-odd sampling") {
  CHECK_FALSE(all_odd_sample(11, Seed{0}, 10).has_value());
  int found = 0;
  for (int n : {8, 10, 12, 14, 16}) {
    const auto g = all_odd_sample(n, Seed{static_cast<std::uint64_t>(n)}, 30);
    if (!g) continue;
    ++found;
    CHECK(classify(*g).all_degrees_odd);
  }
  CHECK(found >= 3);
}

TEST_CASE("random connected plane graphs") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PlaneGraph g = random_connected_plane(10 + static_cast<int>(s), Seed{s}, 8);
    CHECK(g.is_connected());
    CHECK(g.edge_count() == 3 * g.vertex_count() - 6 - 8);
  }
}

TEST_CASE("trace sidecars round trip") {
  for (const Generated& gen : {planar_three_tree(9, Seed{2}), recursive_eulerian(3, Seed{2})}) {
    const std::string json = trace_to_json(gen.trace);
    CHECK(trace_from_json(json) == gen.trace);
  }
  CHECK(trace_to_json(recursive_eulerian(1, Seed{0}).trace).find("\"pairs\"") != std::string::npos);
  CHECK_THROWS_AS(trace_from_json("{\"format\":\"other\"}"), ParseError);
  CHECK_THROWS_AS(trace_from_json("not json"), ParseError);
}
