#include "domtri/domination.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "domtri/error.h"
#include "domtri/pgr_io.h"

namespace domtri {

std::string_view to_string(DominationMethod m) {
  switch (m) {
    case DominationMethod::Combinator: return "combinator";
    case DominationMethod::ExactIota: return "iota";
    case DominationMethod::ExactGamma: return "gamma";
    case DominationMethod::Greedy: return "greedy";
  }
  return "greedy";
}

AbstractGraph to_abstract(const PlaneGraph& g) {
  AbstractGraph a;
  a.adj.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto rot = g.rotation(v);
    a.adj[v].assign(rot.begin(), rot.end());
  }
  return a;
}

AbstractGraph induced_subgraph(const PlaneGraph& g, const VertexSet& s) {
  std::vector<int> local(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v : s) local[v] = next++;
  AbstractGraph a;
  a.adj.resize(s.size());
  for (VertexId v : s)
    for (VertexId w : g.rotation(v))
      if (local[w] >= 0) a.adj[local[v]].push_back(local[w]);
  return a;
}

bool is_dominating(const AbstractGraph& g, const VertexSet& s) {
  std::vector<char> hit(g.vertex_count(), 0);
  for (VertexId v : s) {
    if (v >= g.vertex_count()) throw Error("vertex set exceeds the graph");
    hit[v] = 1;
    for (VertexId w : g.adj[v]) hit[w] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool is_independent(const AbstractGraph& g, const VertexSet& s) {
  for (VertexId v : s) {
    if (v >= g.vertex_count()) throw Error("vertex set exceeds the graph");
    for (VertexId w : g.adj[v])
      if (s.contains(w)) return false;
  }
  return true;
}

bool is_dominating(const PlaneGraph& g, const VertexSet& s) { return is_dominating(to_abstract(g), s); }
bool is_independent(const PlaneGraph& g, const VertexSet& s) { return is_independent(to_abstract(g), s); }

VertexSet undominated_by(const PlaneGraph& g, const Coloring& c, int i) {
  if (i < 0 || i >= c.class_count()) throw Error("undominated_by: class index out of range");
  if (!is_proper(g, c)) throw Error("undominated_by: coloring is not proper");
  std::vector<bool> out(g.vertex_count(), true);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (c[v] != i) continue;
    out[v] = false;
    for (VertexId w : g.rotation(v)) out[w] = false;
  }
  return VertexSet::from_flags(out);
}

VertexSet greedy_maximal_independent(const AbstractGraph& g, std::span<const VertexId> order) {
  const int n = g.vertex_count();
  std::vector<VertexId> seq(order.begin(), order.end());
  if (seq.empty()) {
    seq.resize(n);
    std::iota(seq.begin(), seq.end(), 0);
  }
  if (static_cast<int>(seq.size()) != n) throw Error("greedy_maximal_independent: order is not a permutation");
  std::vector<char> blocked(n, 0);
  std::vector<VertexId> chosen;
  for (VertexId v : seq) {
    if (v < 0 || v >= n) throw Error("greedy_maximal_independent: order references unknown vertex");
    if (blocked[v]) continue;
    chosen.push_back(v);
    blocked[v] = 1;
    for (VertexId w : g.adj[v]) blocked[w] = 1;
  }
  return VertexSet(std::move(chosen));
}

namespace {

bool every_vertex_in_triangle(const PlaneGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto rot = g.rotation(v);
    bool found = false;
    for (std::size_t i = 0; i < rot.size() && !found; ++i)
      for (std::size_t j = i + 1; j < rot.size() && !found; ++j) found = g.has_edge(rot[i], rot[j]);
    if (!found) return false;
  }
  return true;
}

[[noreturn]] void breach(const std::string& what, const PlaneGraph& g, const Coloring& c) {
  throw InvariantBreach(what, to_pgr(g) + coloring_to_text(c));
}

}  // namespace

DominationResult class_combinator(const PlaneGraph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error("class_combinator: coloring is not proper");
  const int k = c.class_count();
  const auto classes = c.classes();
  DominationResult r;
  r.method = DominationMethod::Combinator;

  const int nonempty = static_cast<int>(
      std::count_if(classes.begin(), classes.end(), [](const VertexSet& s) { return !s.empty(); }));
  if (nonempty == 3 && every_vertex_in_triangle(g)) {
    r.empty_class_fallback = true;
    int best = -1;
    for (int i = 0; i < k; ++i) {
      r.per_class.push_back(static_cast<int>(classes[i].size()));
      if (!classes[i].empty() && (best < 0 || classes[i].size() < classes[best].size())) best = i;
    }
    r.set = classes[best];
    r.size = static_cast<int>(r.set.size());
    r.witness_class = best;
    r.undominated.assign(k, VertexSet{});
    r.class_picks.assign(k, VertexSet{});
    if (!is_dominating(g, r.set) || !is_independent(g, r.set))
      breach("class_combinator: nonempty class of a 3-class coloring is not dominating", g, c);
    return r;
  }

  for (int i = 0; i < k; ++i) {
    VertexSet u = undominated_by(g, c, i);
    const VertexSet local = greedy_maximal_independent(induced_subgraph(g, u));
    std::vector<VertexId> picks;
    for (VertexId l : local) picks.push_back(u.members()[l]);
    r.undominated.push_back(std::move(u));
    r.class_picks.emplace_back(std::move(picks));
  }
  for (int i = 0; i < k; ++i) {
    const VertexSet closed = closed_neighborhood(g, r.undominated[i]);
    for (int j = 0; j < k; ++j)
      if (i != j && !closed.intersected(r.undominated[j]).empty()) r.disjoint_neighborhoods = false;
    r.joint = r.joint.united(r.class_picks[i]);
  }
  r.joint_independent = is_independent(g, r.joint);
  const bool enforce = k == 4 && classify(g).is_near_triangulation();
  if (enforce && !r.disjoint_neighborhoods)
    breach("class_combinator: N[U_i] meets U_j for some i != j", g, c);
  if (enforce && !r.joint_independent) breach("class_combinator: union of the S_i is not independent", g, c);

  int best = -1;
  for (int i = 0; i < k; ++i) {
    VertexSet cand = classes[i].united(r.class_picks[i]);
    r.per_class.push_back(static_cast<int>(cand.size()));
    if (!is_dominating(g, cand) || !is_independent(g, cand)) {
      std::ostringstream os;
      os << "class_combinator: C_" << i << " u S_" << i << " is not independent dominating";
      breach(os.str(), g, c);
    }
    if (best < 0 || static_cast<int>(cand.size()) < r.size) {
      best = i;
      r.size = static_cast<int>(cand.size());
      r.set = std::move(cand);
    }
  }
  r.witness_class = best;
  return r;
}

}  // namespace domtri
