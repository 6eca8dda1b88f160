#include "domtri/accounting.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "domtri/error.h"
#include "domtri/pgr_io.h"

namespace domtri {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
  }
  return "<=";
}

bool compare(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::Le: return lhs <= rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Eq: return lhs == rhs;
  }
  return false;
}

Check make_check(std::string name, Rational lhs, Relation r, Rational rhs) {
  const bool ok = compare(lhs, r, rhs);
  return Check{std::move(name), lhs, r, rhs, ok};
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

bool AccountingReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

const Check* AccountingReport::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string instance_payload(const PlaneGraph& g, const Coloring* c,
                             const std::vector<std::pair<std::string, VertexSet>>& sets) {
  std::ostringstream os;
  os << to_pgr(g);
  if (c) os << coloring_to_text(*c);
  for (const auto& [name, set] : sets) {
    os << "# set " << name;
    for (VertexId v : set) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

namespace {

int link_failures(const PlaneGraph& g) {
  if (g.vertex_count() < 4) return 0;
  int bad = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    try {
      neighborhood_structure(g, v);
    } catch (const InvariantBreach&) {
      ++bad;
    }
  }
  return bad;
}

}  // namespace

AccountingReport coloring_accounting(const PlaneGraph& g, const Coloring& c, const DominationResult& result) {
  if (c.class_count() != 4) throw Error("accounting: needs a 4-coloring");
  if (!is_proper(g, c)) throw Error("accounting: coloring is not proper");
  const GraphClass cls = classify(g);
  if (!cls.is_near_triangulation()) throw Error("accounting: graph is not a near triangulation");
  if (result.method != DominationMethod::Combinator) throw Error("accounting: result is not a combinator result");

  using R = Relation;
  const int n = g.vertex_count();
  AccountingReport rep;
  rep.n = n;
  rep.planar = cls.kind == GraphKind::PlanarTriangulation;
  rep.min_degree_five = rep.planar && cls.min_degree >= 5;
  rep.fallback = result.empty_class_fallback;
  rep.selected = result.size;
  auto add = [&](std::string name, Rational lhs, R r, Rational rhs) {
    rep.checks.push_back(make_check(std::move(name), lhs, r, rhs));
  };

  add("link_cycle_or_path", link_failures(g), R::Eq, 0);

  if (rep.fallback) {
    rep.n_prime = n;
    add("fallback_third", result.size, R::Le, Rational(n, 3));
    return rep;
  }

  add("undominated_closures_disjoint", result.disjoint_neighborhoods ? 0 : 1, R::Eq, 0);
  const VertexSet& s = result.joint;
  add("joint_independent", is_independent(g, s) ? 0 : 1, R::Eq, 0);

  const auto& outer_walk = g.outer_face().boundary;
  const std::set<VertexId> outer_vertices(outer_walk.begin(), outer_walk.end());
  rep.outer = static_cast<int>(outer_vertices.size());
  rep.s = static_cast<int>(s.size());
  for (VertexId v : s) (outer_vertices.count(v) ? rep.y : rep.x)++;

  const DeletionResult del = delete_vertices(g, s);
  const PlaneGraph& h = del.graph;
  rep.n_prime = h.vertex_count();
  add("h_connected", h.component_count(), R::Eq, 1);

  const FaceId h_outer = h.outer_face_id();
  int y_misplaced = 0, x_misplaced = 0, x_odd = 0;
  std::map<FaceId, int> x_per_face;
  std::set<FaceId> inner_four;
  for (const Face& f : h.faces()) {
    if (f.degree == 4) {
      ++rep.f4;
      if (f.id != h_outer) inner_four.insert(f.id);
    }
  }
  rep.f4_inner = static_cast<int>(inner_four.size());
  for (auto [v, f] : del.containing_face) {
    if (outer_vertices.count(v)) {
      if (f != h_outer) ++y_misplaced;
      continue;
    }
    if (f == h_outer || f < 0) {
      ++x_misplaced;
      continue;
    }
    ++x_per_face[f];
    if (h.face(f).degree % 2 != 0) ++x_odd;
    if (inner_four.count(f)) ++rep.x4;
  }
  int max_x_per_face = 0;
  for (auto [f, k] : x_per_face) max_x_per_face = std::max(max_x_per_face, k);
  add("y_in_outer_face", y_misplaced, R::Eq, 0);
  add("x_in_inner_faces", x_misplaced, R::Eq, 0);
  add("one_x_per_face", max_x_per_face, R::Le, 1);

  long long even_faces = 0, big = 0;
  for (const Face& f : h.faces()) {
    if (f.degree % 2 == 0) ++even_faces;
    if (f.degree >= 6) ++big;
  }
  const FacesInequality faces = check_faces_inequality(h);
  add("faces_h", faces.lhs, R::Le, faces.rhs);
  {
    long long f3 = 0, f5 = 0;
    for (const Face& f : h.faces()) {
      f3 += f.degree == 3;
      f5 += f.degree == 5;
    }
    add("faces_h_strengthened", faces.lhs, R::Le, Rational(2 * faces.rhs - f3 - 3 * f5, 2));
  }

  const long long n1 = rep.n_prime, f4 = rep.f4, x = rep.x, y = rep.y, sz = rep.s, o = rep.outer;
  add("x_faces_even", x_odd, R::Eq, 0);
  add("x_le_even_faces", 2 * x, R::Le, 2 * even_faces);
  add("even_faces_le", 2 * even_faces, R::Le, 2 * f4 + 2 * big);
  add("two_x_bound", 2 * x, R::Le, n1 - 2 + f4);
  add("ineq2", 3 * x + y, R::Le, n - 2 + f4);
  add("y_le_half_outer", y, R::Le, Rational(o, 2));
  add("three_s", 3 * sz, R::Le, n - 2 + f4 + o);

  long long class_sum = 0;
  const auto classes = c.classes();
  for (int i = 0; i < 4; ++i)
    class_sum += static_cast<long long>(classes[i].size()) + static_cast<long long>(result.class_picks.at(i).size());
  add("class_sum_identity", class_sum, R::Eq, n + sz);
  add("class_sum", class_sum, R::Le, Rational(4 * n - 2 + f4 + o, 3));
  add("f4_plus_outer", f4 + o, R::Le, n + 1);
  add("f4_inner_plus_one", f4, R::Le, rep.f4_inner + 1);
  add("f4_inner_eq_x4", rep.f4_inner, R::Eq, rep.x4);
  add("selected_joint", rep.selected, R::Le, Rational(n, 3) + Rational(f4 + o - 2, 12));
  add("selected_5n12", rep.selected, R::Lt, Rational(5 * n, 12));

  if (rep.planar) {
    add("planar_outer_triangle", o, R::Eq, 3);
    add("planar_y", y, R::Le, 1);
    add("planar_three_s", 3 * sz, R::Le, n + f4);
    add("planar_f4", f4, R::Le, Rational(2 * n - 4, 4));
    add("planar_f4_half", f4, R::Lt, Rational(n, 2));
    add("planar_s_half", sz, R::Lt, Rational(n, 2));
    add("planar_selected", rep.selected, R::Le, Rational(n + sz, 4));
    add("planar_3n8", rep.selected, R::Lt, Rational(3 * n, 8));
  }
  if (rep.min_degree_five) {
    add("delta5_f4", f4, R::Eq, 0);
    add("delta5_s", sz, R::Le, Rational(n, 3));
    add("delta5_selected", rep.selected, R::Le, Rational(n, 3));
  }
  return rep;
}

AccountingReport verify_coloring_accounting(const PlaneGraph& g, const Coloring& c,
                                            const DominationResult& result) {
  AccountingReport rep = coloring_accounting(g, c, result);
  for (const Check& chk : rep.checks) {
    if (chk.holds) continue;
    std::ostringstream os;
    os << "accounting: " << chk.name << " fails (" << format_rational(chk.lhs) << ' ' << to_string(chk.relation)
       << ' ' << format_rational(chk.rhs) << ")";
    throw InvariantBreach(os.str(), instance_payload(g, &c, {{"S", result.joint}, {"selected", result.set}}));
  }
  return rep;
}

}  // namespace domtri
