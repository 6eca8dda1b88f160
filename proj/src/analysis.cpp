#include "domtri/analysis.h"

#include <algorithm>
#include <chrono>

#include "domtri/error.h"
#include "domtri/pgr_io.h"

namespace domtri {

BoundRecord evaluate(const BoundSpec& spec, int n, long long lhs) {
  BoundRecord r;
  r.bound = spec.name;
  r.kind = spec.kind;
  r.lhs = lhs;
  r.relation = spec.relation;
  r.rhs = spec.rhs(n);
  r.holds = compare(Rational(lhs), spec.relation, r.rhs);
  return r;
}

namespace {

OddDegreeRecord compute_odd_degree(const PlaneGraph& g, const Coloring& c, std::optional<int> iota) {
  if (classify(g).kind != GraphKind::PlanarTriangulation)
    throw Error("odd_degree_analysis: graph is not a planar triangulation");
  if (c.class_count() != 4 || !is_proper(g, c)) throw Error("odd_degree_analysis: needs a proper 4-coloring");
  const int n = g.vertex_count();
  int odd = 0;
  for (VertexId v = 0; v < n; ++v) odd += g.degree(v) % 2;
  OddDegreeRecord r;
  r.alpha = Rational(odd, n);
  const auto classes = c.classes();
  r.all_classes_dominating =
      std::all_of(classes.begin(), classes.end(), [&](const VertexSet& s) { return is_dominating(g, s); });
  r.odd_vertices_dominated_by_all = true;
  for (int i = 0; i < 4; ++i)
    for (VertexId v : undominated_by(g, c, i))
      if (g.degree(v) % 2) r.odd_vertices_dominated_by_all = false;
  r.combinator = class_combinator(g, c).size;
  r.alpha_bound = (Rational(2) - r.alpha) * n / 4;
  r.combinator_within = Rational(r.combinator) <= r.alpha_bound;
  r.iota = iota;
  if (iota) r.iota_within = Rational(*iota) <= r.alpha_bound;
  return r;
}

class Analyzer {
 public:
  Analyzer(const GraphItem& item, const AnalysisOptions& options, BoundReport& report)
      : item_(item), g_(item.graph), n_(g_.vertex_count()), opt_(options), r_(report) {}

  void run() {
    r_.graph_class = classify(g_);
    if (r_.graph_class.kind == GraphKind::Invalid) {
      r_.errors.push_back("graph is not connected");
      return;
    }
    run_oracles();
    if (n_ >= 2) faces_inequality();
    if (r_.graph_class.is_near_triangulation()) near_triangulation();
    if (item_.family == "diamond_chain") diamond_chain();
    if (item_.family == "three_tree") three_tree();
    if (item_.family == "eulerian") eulerian();
    if (item_.family == "k4_chain" && r_.gamma) bound("gamma_eq_n/4_k4chain", *r_.gamma);
  }

 private:
  std::string payload(const Coloring* c = nullptr, std::vector<std::pair<std::string, VertexSet>> sets = {}) const {
    return instance_payload(g_, c, sets);
  }

  void bound(std::string_view name, long long lhs) {
    const BoundRecord rec = evaluate(find_bound(name), n_, lhs);
    if (!rec.holds && rec.kind == BoundKind::Theorem)
      r_.breaches.push_back({"bound " + rec.bound + " fails: " + std::to_string(lhs) + " vs " + format_rational(rec.rhs),
                             payload(coloring_, sets_)});
    r_.bounds.push_back(rec);
  }

  void check(Check c, CheckKind kind = CheckKind::Invariant) {
    if (!c.holds && kind == CheckKind::Invariant)
      r_.breaches.push_back({"check " + c.name + " fails: " + format_rational(c.lhs) + ' ' +
                                 std::string(to_string(c.relation)) + ' ' + format_rational(c.rhs),
                             payload(coloring_, sets_)});
    r_.checks.push_back({std::move(c), kind});
  }

  void flag(std::string name, bool ok, CheckKind kind = CheckKind::Invariant) {
    check(make_check(std::move(name), ok ? 1 : 0, Relation::Eq, 1), kind);
  }

  void run_oracles() {
    if (n_ <= opt_.iota_limit.max_vertices) {
      try {
        const DominationResult res = exact_iota(g_, opt_.iota_limit);
        r_.iota = res.size;
        r_.iota_status = "exact";
        iota_set_ = res.set;
      } catch (const OracleLimitExceeded&) {
        r_.iota_status = "refused";
      }
    }
    if (n_ <= opt_.gamma_limit.max_vertices) {
      try {
        r_.gamma = exact_gamma(g_, opt_.gamma_limit).size;
        r_.gamma_status = "exact";
      } catch (const OracleLimitExceeded&) {
        r_.gamma_status = "refused";
      }
    }
    if (r_.iota && r_.gamma) check(make_check("gamma_le_iota", *r_.gamma, Relation::Le, *r_.iota));
  }

  void faces_inequality() {
    const FacesInequality f = check_faces_inequality(g_);
    check(make_check("faces_g", f.lhs, Relation::Le, f.rhs));
    long long f3 = 0, f5 = 0;
    for (const Face& face : g_.faces()) {
      f3 += face.degree == 3;
      f5 += face.degree == 5;
    }
    check(make_check("faces_g_strengthened", f.lhs, Relation::Le, Rational(2 * f.rhs - f3 - 3 * f5, 2)));
  }

  void near_triangulation() {
    const bool planar = r_.graph_class.kind == GraphKind::PlanarTriangulation;
    const Coloring c4 = four_coloring(g_);
    coloring_ = &c4;
    const DominationResult res = class_combinator(g_, c4);
    sets_ = {{"S", res.joint}, {"selected", res.set}};
    r_.combinator = res.size;
    if (r_.iota) check(make_check("iota_le_combinator", *r_.iota, Relation::Le, res.size));

    const AccountingReport acc = coloring_accounting(g_, c4, res);
    for (const Check& c : acc.checks) {
      Check named = c;
      named.name = "acct." + c.name;
      check(std::move(named));
    }

    bound("combinator_le_5n/12", res.size);
    if (r_.iota) bound("iota_le_5n/12", *r_.iota);
    if (planar) {
      bound("combinator_lt_3n/8", res.size);
      if (r_.iota) bound("iota_lt_3n/8", *r_.iota);
    }
    if (planar && r_.graph_class.min_degree >= 5) {
      bound("combinator_le_n/3_delta5", res.size);
      if (r_.iota) bound("iota_le_n/3_delta5", *r_.iota);
    }
    if (r_.gamma) bound("gamma_le_n/3", *r_.gamma);

    // Counting bound for an r-dynamic 4-coloring, r capped by the minimum degree.
    int r_dyn = 0;
    while (r_dyn < 4 && is_r_dynamic(g_, c4, r_dyn + 1)) ++r_dyn;
    const int r = std::min(r_dyn, r_.graph_class.min_degree);
    check(make_check("dynamic_count", res.size, Relation::Le, Rational((4 - r) * n_, 4)));
    if (planar && n_ >= 4 && is_acyclic(g_, c4)) flag("acyclic_is_3_dynamic", is_r_dynamic(g_, c4, 3));

    if (planar) {
      const OddDegreeRecord odd = compute_odd_degree(g_, c4, r_.iota);
      if (odd.alpha == Rational(1)) {
        flag("odd_all_classes_dominating", odd.all_classes_dominating);
        bound("combinator_le_n/4_odd", res.size);
        if (r_.iota) bound("iota_le_n/4_odd", *r_.iota);
      }
      flag("odd_vertices_dominated_by_all", odd.odd_vertices_dominated_by_all);
      check(make_check("alpha_bound_combinator", odd.combinator, Relation::Le, odd.alpha_bound), CheckKind::Finding);
      if (odd.iota)
        check(make_check("alpha_bound_iota", *odd.iota, Relation::Le, odd.alpha_bound), CheckKind::Finding);
      if (odd.alpha >= Rational(2, 3) && r_.iota) bound("iota_le_n/3_two_thirds_odd", *r_.iota);
      if (r_.iota) bound("iota_le_n/3_conjecture", *r_.iota);
      if (r_.gamma) bound("gamma_le_n/4_conjecture", *r_.gamma);
    }
    coloring_ = nullptr;
    sets_.clear();
  }

  void diamond_chain() {
    const int k = n_ / 7;
    const VertexSet w = diamond_chain_witness(k);
    flag("diamond_witness_independent_dominating", is_independent(g_, w) && is_dominating(g_, w));
    check(make_check("diamond_witness_size", static_cast<long long>(w.size()), Relation::Eq, 2 * k));
    if (r_.iota) bound("iota_eq_2n/7", *r_.iota);
  }

  void three_tree() {
    if (!item_.trace || n_ < 4) return;
    const Coloring c = stacked_four_coloring(g_, *item_.trace);
    coloring_ = &c;
    const auto classes = c.classes();
    bool all_dom = true;
    std::size_t smallest = classes.front().size();
    for (const VertexSet& s : classes) {
      all_dom = all_dom && is_dominating(g_, s) && is_independent(g_, s);
      smallest = std::min(smallest, s.size());
    }
    flag("stacked_classes_dominating", all_dom);
    bound("stacked_min_class_le_n/4", static_cast<long long>(smallest));
    if (r_.iota) bound("iota_le_n/4_3tree", *r_.iota);
    coloring_ = nullptr;
  }

  void eulerian() {
    flag("eulerian_degrees_even", r_.graph_class.all_degrees_even);
    if (!item_.trace) return;
    int v4 = 0;
    for (VertexId v = 0; v < n_; ++v) v4 += g_.degree(v) == 4;
    if (n_ >= 9) {
      const Degree4Structure d4 = degree4_structure(g_);
      flag("degree4_triangles", d4.all_triangles, CheckKind::Finding);
      flag("degree4_small_cliques", d4.all_small_cliques);
      check(make_check("degree4_per_face", d4.max_per_face, Relation::Le, 3));
      check(make_check("degree4_count", 7LL * v4, Relation::Le, 6LL * n_ - 12));
    }
    const Coloring c6 = rec_eulerian_six_coloring(g_, *item_.trace);
    coloring_ = &c6;
    flag("six_coloring_proper", is_proper(g_, c6));
    flag("six_coloring_5_dynamic", is_r_dynamic(g_, c6, 5));
    bool distinct = true;
    for (auto [u, v] : g_.edges())
      if (g_.degree(u) == 4 && g_.degree(v) == 4 &&
          missing_colors(g_, c6, u).classes == missing_colors(g_, c6, v).classes)
        distinct = false;
    flag("six_coloring_distinct_missing", distinct);
    const DominationResult res = class_combinator(g_, c6);
    sets_ = {{"selected", res.set}};
    r_.combinator6 = res.size;
    check(make_check("six_class_size", 6LL * res.size, Relation::Le, n_ + v4));
    if (r_.iota) check(make_check("iota_le_combinator6", *r_.iota, Relation::Le, res.size));
    if (n_ >= 9) {
      bound("combinator6_le_(13n-12)/42", res.size);
      if (r_.iota) bound("iota_lt_13n/42", *r_.iota);
    }
    coloring_ = nullptr;
    sets_.clear();
  }

  const GraphItem& item_;
  const PlaneGraph& g_;
  const int n_;
  const AnalysisOptions& opt_;
  BoundReport& r_;
  const Coloring* coloring_ = nullptr;
  std::vector<std::pair<std::string, VertexSet>> sets_;
  VertexSet iota_set_;
};

}  // namespace

BoundReport analyze(const GraphItem& item, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  BoundReport r;
  r.id = item.id;
  r.family = item.family;
  r.seed = item.seed;
  r.n = item.graph.vertex_count();
  r.pgr = to_pgr(item.graph);
  try {
    Analyzer(item, options, r).run();
  } catch (const InvariantBreach& e) {
    r.breaches.push_back({e.what(), e.payload().empty() ? to_pgr(item.graph) : e.payload()});
  } catch (const std::exception& e) {
    r.errors.push_back(e.what());
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

OddDegreeRecord odd_degree_analysis(const PlaneGraph& g, const Coloring& c, std::optional<int> exact_iota_value) {
  OddDegreeRecord r = compute_odd_degree(g, c, exact_iota_value);
  if (r.alpha == Rational(1) && !r.all_classes_dominating)
    throw InvariantBreach("odd_degree_analysis: all degrees odd but a class is not dominating",
                          instance_payload(g, &c, {}));
  if (!r.odd_vertices_dominated_by_all)
    throw InvariantBreach("odd_degree_analysis: an odd-degree vertex is undominated by some class",
                          instance_payload(g, &c, {}));
  return r;
}

}  // namespace domtri
