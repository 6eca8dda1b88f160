#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "domtri/coloring.h"
#include "domtri/error.h"
#include "domtri/generators.h"

using namespace domtri;

namespace {

Coloring rainbow_octahedron() { return Coloring(6, {0, 1, 2, 3, 4, 5}); }
Coloring antipodal_octahedron() { return Coloring(3, {0, 1, 2, 0, 1, 2}); }

}  // namespace

TEST_CASE("properness") {
  CHECK(is_proper(k4(), Coloring(4, {0, 1, 2, 3})));
  CHECK_FALSE(is_proper(triangle(), Coloring(3, {0, 1, 0})));
  CHECK(is_proper(octahedron(), antipodal_octahedron()));
  CHECK_THROWS_AS(is_proper(triangle(), Coloring(3, {0, 1, Coloring::kUncolored})), Error);
  CHECK_THROWS_AS(is_proper(triangle(), Coloring(3, {0, 1})), Error);
  CHECK_THROWS_AS(Coloring(3, {0, 3}), Error);
  CHECK(class_sizes(antipodal_octahedron()) == std::vector<int>{2, 2, 2});
}

TEST_CASE("four coloring search") {
  const Coloring t = four_coloring(triangle());
  CHECK(is_proper(triangle(), t));
  auto sizes = class_sizes(t);
  CHECK(std::count(sizes.begin(), sizes.end(), 0) == 1);
  CHECK(class_sizes(four_coloring(k4())) == std::vector<int>{1, 1, 1, 1});
  CHECK(is_proper(icosahedron(), four_coloring(icosahedron())));
  for (std::uint64_t s = 0; s < 30; ++s) {
    const PlaneGraph g = random_triangulation(10 + static_cast<int>(2 * s), Seed{s}, 100);
    const Coloring c = four_coloring(g);
    CHECK(c.class_count() == 4);
    CHECK(is_proper(g, c));
    for (int size : class_sizes(c)) CHECK(size < g.vertex_count());
    CHECK(four_coloring(g) == c);
  }
}

TEST_CASE("dynamic colorings") {
  CHECK(is_r_dynamic(octahedron(), rainbow_octahedron(), 5));
  CHECK_FALSE(is_r_dynamic(octahedron(), antipodal_octahedron(), 5));
  CHECK(is_r_dynamic(octahedron(), antipodal_octahedron(), 2));
  CHECK_THROWS_AS(is_r_dynamic(triangle(), Coloring(3, {0, 0, 1}), 2), Error);
}

TEST_CASE("acyclic colorings") {
  CHECK(is_acyclic(k4(), Coloring(4, {0, 1, 2, 3})));
  CHECK_FALSE(is_acyclic(octahedron(), antipodal_octahedron()));
  CHECK(is_acyclic(octahedron(), rainbow_octahedron()));
}

TEST_CASE("acyclic colorings of triangulations are 3-dynamic") {
  // Search every proper 5-coloring of small 3-trees for acyclic ones; each
  // must be 3-dynamic.
  for (std::uint64_t s = 0; s < 6; ++s) {
    const PlaneGraph g = planar_three_tree(6, Seed{s}).graph;
    const int n = g.vertex_count();
    std::vector<int> col(n, 0);
    int acyclic = 0;
    for (;;) {
      const Coloring c(5, col);
      if (is_proper(g, c) && is_acyclic(g, c)) {
        ++acyclic;
        CHECK(is_r_dynamic(g, c, 3));
      }
      int i = 0;
      while (i < n && ++col[i] == 5) col[i++] = 0;
      if (i == n) break;
    }
    CHECK(acyclic > 0);
  }
}

TEST_CASE("missing colours") {
  const PlaneGraph oct = octahedron();
  const Coloring c = rainbow_octahedron();
  for (VertexId v = 0; v < 6; ++v) CHECK(missing_colors(oct, c, v).classes == std::vector<int>{(v + 3) % 6});
  for (VertexId v = 0; v < 4; ++v) CHECK(missing_colors(k4(), Coloring(4, {0, 1, 2, 3}), v).classes.empty());
}

TEST_CASE("class permutations") {
  const Coloring c = antipodal_octahedron();
  CHECK(permute_classes(c, {0, 1, 2}) == c);
  CHECK(permute_classes(Coloring(4, {0, 1, 0}), {0, 1, 3, 2}) == Coloring(4, {0, 1, 0}));
  CHECK_THROWS_AS(permute_classes(c, {0, 0, 1}), Error);
  CHECK_THROWS_AS(permute_classes(c, {0, 1}), Error);
  const PlaneGraph g = random_triangulation(16, Seed{2}, 50);
  const Coloring base = four_coloring(g);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    const Coloring p = permute_classes(base, perm);
    CHECK(is_proper(g, p));
    CHECK(is_r_dynamic(g, p, 3) == is_r_dynamic(g, base, 3));
    CHECK(is_acyclic(g, p) == is_acyclic(g, base));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      CHECK(missing_colors(g, p, v).classes.size() == missing_colors(g, base, v).classes.size());
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("stacked four coloring of 3-trees") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Generated gen = planar_three_tree(5 + static_cast<int>(s), Seed{s});
    const Coloring c = stacked_four_coloring(gen.graph, gen.trace);
    CHECK(is_proper(gen.graph, c));
  }
  const Generated e = recursive_eulerian(2, Seed{0});
  CHECK_THROWS_AS(stacked_four_coloring(e.graph, e.trace), Error);
  const Generated a = planar_three_tree(8, Seed{1});
  CHECK_THROWS_AS(stacked_four_coloring(planar_three_tree(8, Seed{2}).graph, a.trace), Error);
}

TEST_CASE("inductive six coloring") {
  SUBCASE("base triangle") {
    const Generated gen = recursive_eulerian(0, Seed{0});
    const Coloring c = rec_eulerian_six_coloring(gen.graph, gen.trace);
    CHECK(class_sizes(c) == std::vector<int>{1, 1, 1, 0, 0, 0});
  }
  SUBCASE("octahedron is rainbow") {
    const Generated gen = recursive_eulerian(1, Seed{0});
    const Coloring c = rec_eulerian_six_coloring(gen.graph, gen.trace);
    CHECK(class_sizes(c) == std::vector<int>{1, 1, 1, 1, 1, 1});
    for (const BuildStep& step : gen.trace.steps)
      for (auto [a, x] : opposite_pairs(step)) {
        CHECK(missing_colors(gen.graph, c, a).classes == std::vector<int>{c[x]});
        CHECK(missing_colors(gen.graph, c, x).classes == std::vector<int>{c[a]});
      }
  }
  SUBCASE("t = 3, seed 11 and a sweep") {
    std::vector<Generated> runs{recursive_eulerian(3, Seed{11})};
    for (int t = 2; t <= 8; ++t)
      for (std::uint64_t s = 0; s < 5; ++s) runs.push_back(recursive_eulerian(t, Seed{s}));
    for (const Generated& gen : runs) {
      const PlaneGraph& g = gen.graph;
      const Coloring c = rec_eulerian_six_coloring(g, gen.trace);
      CHECK(c.class_count() == 6);
      CHECK(is_proper(g, c));
      CHECK(is_r_dynamic(g, c, 5));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto lv = missing_colors(g, c, v).classes;
        if (g.degree(v) >= 6) CHECK(lv.empty());
        if (g.degree(v) == 4) CHECK(lv.size() == 1);
        for (VertexId w : g.rotation(v))
          if (g.degree(v) == 4 && g.degree(w) == 4) CHECK(lv != missing_colors(g, c, w).classes);
      }
      CHECK(rec_eulerian_six_coloring(g, gen.trace) == c);
    }
  }
  const Generated st = planar_three_tree(6, Seed{0});
  CHECK_THROWS_AS(rec_eulerian_six_coloring(st.graph, st.trace), Error);
}

TEST_CASE("coloring text format") {
  const Coloring c(4, {0, 3, 1, 2, 0});
  const std::string text = coloring_to_text(c);
  CHECK(text.rfind("# k 4\n0 0\n", 0) == 0);
  CHECK(parse_coloring(text, 5) == c);
  CHECK(parse_coloring("0 1\n1 0\n", 2).class_count() == 2);
  CHECK_THROWS_AS(parse_coloring("0 1\n0 0\n", 2), ParseError);
  CHECK_THROWS_AS(parse_coloring("# k 2\n0 2\n", 2), ParseError);
  CHECK_THROWS_AS(parse_coloring("5 0\n", 2), ParseError);
  CHECK_THROWS_AS(parse_coloring("a b\n", 2), ParseError);
}
