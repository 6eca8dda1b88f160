#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "domtri/coloring.h"
#include "domtri/plane_graph.h"

namespace domtri {

/// Plain adjacency lists, used for induced subgraphs such as G[U_i].
struct AbstractGraph {
  std::vector<std::vector<VertexId>> adj;

  int vertex_count() const noexcept { return static_cast<int>(adj.size()); }
};

AbstractGraph to_abstract(const PlaneGraph& g);

/// G[s] with local ids 0..|s|-1 in ascending order of the members of s.
AbstractGraph induced_subgraph(const PlaneGraph& g, const VertexSet& s);

bool is_dominating(const PlaneGraph& g, const VertexSet& s);
bool is_independent(const PlaneGraph& g, const VertexSet& s);
bool is_dominating(const AbstractGraph& g, const VertexSet& s);
bool is_independent(const AbstractGraph& g, const VertexSet& s);

/// U_i = V \ N[C_i].
VertexSet undominated_by(const PlaneGraph& g, const Coloring& c, int i);

/// First-fit maximal independent set scanning `order` (ascending ids when
/// empty). `order` must be a permutation of the vertices.
VertexSet greedy_maximal_independent(const AbstractGraph& g, std::span<const VertexId> order = {});

enum class DominationMethod { Combinator, ExactIota, ExactGamma, Greedy };

std::string_view to_string(DominationMethod m);

struct DominationResult {
  VertexSet set;
  int size = 0;
  DominationMethod method = DominationMethod::Greedy;
  std::optional<int> witness_class;  ///< chosen i of C_i u S_i
  std::vector<int> per_class;        ///< |C_i u S_i| for every class

  // Combinator detail.
  std::vector<VertexSet> undominated;  ///< U_i
  std::vector<VertexSet> class_picks;  ///< S_i
  VertexSet joint;                     ///< S = union of all S_i
  bool empty_class_fallback = false;
  bool disjoint_neighborhoods = true;  ///< N[U_i] n U_j empty for i != j
  bool joint_independent = true;

  long long search_nodes = 0;  ///< exact oracles only
};

/// Builds C_i u S_i for every class i (S_i a greedy maximal independent
/// set of G[U_i]) and returns the smallest. When exactly three classes are
/// nonempty and every vertex lies in a triangle, the smallest nonempty class
/// is returned directly.
///
/// For 4-colorings of near triangulations the disjointness N[U_i] n U_j = {}
/// and the independence of S are enforced (InvariantBreach otherwise); for
/// other inputs they are only reported. Every returned set is verified to be
/// independent and dominating.
DominationResult class_combinator(const PlaneGraph& g, const Coloring& c);

/// Refusal thresholds for the exact oracles.
struct OracleLimit {
  int max_vertices = 35;
  long long max_nodes = 500'000'000;
  std::chrono::milliseconds time_budget{0};  ///< zero means unlimited
};

/// Minimum independent dominating set (= minimum maximal independent set)
/// by branch and bound over independent dominating sets. Throws
/// OracleLimitExceeded beyond the limits (hard cap 64 vertices).
DominationResult exact_iota(const PlaneGraph& g, const OracleLimit& limit = {});

/// Minimum dominating set by branching on the lowest undominated vertex.
DominationResult exact_gamma(const PlaneGraph& g, const OracleLimit& limit = {24});

}  // namespace domtri
