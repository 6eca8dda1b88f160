#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute_force.h"
#include "domtri/coloring.h"
#include "domtri/domination.h"
#include "domtri/error.h"
#include "domtri/generators.h"
#include "graphs.h"

using namespace domtri;

TEST_CASE("domination predicates") {
  const PlaneGraph oct = octahedron();
  CHECK(is_dominating(oct, VertexSet{0, 1, 2, 3, 4, 5}));
  CHECK(is_independent(oct, VertexSet{}));
  CHECK_FALSE(is_dominating(oct, VertexSet{}));
  CHECK(is_dominating(oct, VertexSet{1, 4}));
  CHECK(is_independent(oct, VertexSet{1, 4}));
  CHECK_FALSE(is_independent(oct, VertexSet{0, 1}));
  CHECK_THROWS_AS(is_dominating(oct, VertexSet{9}), Error);
}

TEST_CASE("undominated vertices") {
  for (int i = 0; i < 4; ++i) CHECK(undominated_by(k4(), Coloring(4, {0, 1, 2, 3}), i).empty());
  const Coloring rainbow(6, {0, 1, 2, 3, 4, 5});
  for (int i = 0; i < 6; ++i) CHECK(undominated_by(octahedron(), rainbow, i) == VertexSet{(i + 3) % 6});
  CHECK_THROWS_AS(undominated_by(k4(), Coloring(4, {0, 1, 2, 3}), 4), Error);
  const PlaneGraph ico = icosahedron();
  const Coloring c = four_coloring(ico);
  for (int i = 0; i < 4; ++i) CHECK(undominated_by(ico, c, i).empty());
}

TEST_CASE("greedy maximal independent sets") {
  CHECK(greedy_maximal_independent(AbstractGraph{}).empty());
  CHECK(greedy_maximal_independent(to_abstract(triangle())) == VertexSet{0});
  const AbstractGraph p3 = to_abstract(testing::path(3));
  const std::vector<VertexId> order{1, 0, 2};
  CHECK(greedy_maximal_independent(p3, order) == VertexSet{1});
  CHECK(greedy_maximal_independent(p3) == VertexSet{0, 2});
  const std::vector<VertexId> short_order{0};
  CHECK_THROWS_AS(greedy_maximal_independent(p3, short_order), Error);

  std::mt19937_64 rng(5);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const PlaneGraph g = random_connected_plane(20, Seed{s}, 15);
    const AbstractGraph a = to_abstract(g);
    std::vector<VertexId> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const VertexSet m = greedy_maximal_independent(a, perm);
    CHECK(is_independent(a, m));
    CHECK(is_dominating(a, m));
  }
}

TEST_CASE("induced subgraphs") {
  const AbstractGraph h = induced_subgraph(octahedron(), VertexSet{0, 1, 3});
  CHECK(h.vertex_count() == 3);
  CHECK(h.adj[0] == std::vector<VertexId>{1});
  CHECK(h.adj[2] == std::vector<VertexId>{1});
}

TEST_CASE("class combinator") {
  SUBCASE("rainbow K4") {
    const DominationResult r = class_combinator(k4(), Coloring(4, {0, 1, 2, 3}));
    CHECK(r.size == 1);
    CHECK(r.per_class == std::vector<int>{1, 1, 1, 1});
    for (const VertexSet& u : r.undominated) CHECK(u.empty());
  }
  SUBCASE("triangle uses the empty-class fallback") {
    const DominationResult r = class_combinator(triangle(), four_coloring(triangle()));
    CHECK(r.size == 1);
    CHECK(r.empty_class_fallback);
  }
  SUBCASE("diamond chain of two gadgets") {
    const PlaneGraph g = diamond_chain(2);
    const DominationResult r = class_combinator(g, four_coloring(g));
    CHECK(r.size <= 14 * 3 / 8);
    CHECK(r.size >= exact_iota(g).size);
    CHECK(r.disjoint_neighborhoods);
    CHECK(r.joint_independent);
  }
  SUBCASE("recursive Eulerian six colorings") {
    for (int t = 1; t <= 8; ++t)
      for (std::uint64_t s = 0; s < 5; ++s) {
        const Generated gen = recursive_eulerian(t, Seed{s});
        const PlaneGraph& g = gen.graph;
        const DominationResult r = class_combinator(g, rec_eulerian_six_coloring(g, gen.trace));
        int v4 = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) v4 += g.degree(v) == 4;
        CHECK(6 * r.size <= g.vertex_count() + v4);
        CHECK(is_independent(g, r.set));
        CHECK(is_dominating(g, r.set));
      }
  }
  SUBCASE("results are independent dominating and bounded by |C_i| + |U_i|") {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const PlaneGraph t = random_triangulation(8 + static_cast<int>(s), Seed{s}, 80);
      const PlaneGraph g = s % 2 ? near_triangulation_from(t, 0) : t;
      const Coloring c = four_coloring(g);
      const DominationResult r = class_combinator(g, c);
      CHECK(is_independent(g, r.set));
      CHECK(is_dominating(g, r.set));
      CHECK(r.size == static_cast<int>(r.set.size()));
      const auto classes = c.classes();
      if (r.empty_class_fallback) {
        for (int i = 0; i < 4; ++i)
          if (!classes[i].empty()) CHECK(r.size <= static_cast<int>(classes[i].size()));
        continue;
      }
      CHECK(r.size == *std::min_element(r.per_class.begin(), r.per_class.end()));
      int best = g.vertex_count();
      for (int i = 0; i < 4; ++i) {
        best = std::min(best, static_cast<int>(classes[i].size() + r.undominated[i].size()));
        for (int j = i + 1; j < 4; ++j) CHECK(r.undominated[i].intersected(r.undominated[j]).empty());
      }
      CHECK(r.size <= best);
      CHECK(r.disjoint_neighborhoods);
    }
  }
  CHECK_THROWS_AS(class_combinator(triangle(), Coloring(3, {0, 0, 1})), Error);
}

TEST_CASE("exact oracles on named graphs") {
  CHECK(exact_iota(k4()).size == 1);
  CHECK(exact_gamma(k4()).size == 1);
  CHECK(exact_iota(octahedron()).size == 2);
  CHECK(exact_iota(diamond_chain(3)).size == 6);
  CHECK(exact_gamma(k4_chain(3)).size == 3);
  const DominationResult r = exact_iota(diamond_chain(2));
  CHECK(r.size == 4);
  CHECK(is_independent(diamond_chain(2), r.set));
  CHECK(is_dominating(diamond_chain(2), r.set));
  CHECK(r.method == DominationMethod::ExactIota);
}

TEST_CASE("exact oracles agree with subset enumeration") {
  std::vector<PlaneGraph> corpus{triangle(), k4(), octahedron(), icosahedron(), testing::cycle(7),
                                 testing::path(6), testing::hexagon_fan()};
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 4 + static_cast<int>(s % 9);
    corpus.push_back(random_triangulation(n, Seed{s}, 2 * n));
    corpus.push_back(random_connected_plane(n, Seed{s}, static_cast<int>(s % 5)));
  }
  for (const PlaneGraph& g : corpus) {
    const auto brute = testing::brute_domination(g);
    const DominationResult i = exact_iota(g);
    const DominationResult d = exact_gamma(g);
    CHECK(i.size == brute.iota);
    CHECK(d.size == brute.gamma);
    CHECK(is_independent(g, i.set));
    CHECK(is_dominating(g, i.set));
    CHECK(is_dominating(g, d.set));
  }
}

TEST_CASE("oracle limits refuse instead of degrading") {
  CHECK_THROWS_AS(exact_iota(diamond_chain(6), OracleLimit{35}), OracleLimitExceeded);
  CHECK_THROWS_AS(exact_gamma(diamond_chain(4)), OracleLimitExceeded);
  CHECK_THROWS_AS(exact_iota(diamond_chain(4), OracleLimit{35, 5}), OracleLimitExceeded);
  CHECK(exact_gamma(diamond_chain(4), OracleLimit{35}).size <= 8);
}
