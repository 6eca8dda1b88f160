#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "domtri/coloring.h"
#include "domtri/domination.h"
#include "domtri/plane_graph.h"

namespace domtri {

using Rational = boost::rational<long long>;

enum class Relation { Le, Lt, Eq };

std::string_view to_string(Relation r);
bool compare(const Rational& lhs, Relation r, const Rational& rhs);

/// One exact comparison recorded on an instance.
struct Check {
  std::string name;
  Rational lhs;
  Relation relation = Relation::Le;
  Rational rhs;
  bool holds = false;
};

Check make_check(std::string name, Rational lhs, Relation r, Rational rhs);
std::string format_rational(const Rational& q);

/// Quantities of the four-coloring argument recomputed on one instance:
/// S is the union of the S_i, Y = S on the outer boundary O, X = S \ Y,
/// H = G - S with n' vertices, f_4 = f_4(H), f'_4 its inner 4-faces and X_4
/// the members of S lying in them.
struct AccountingReport {
  int n = 0;
  int n_prime = 0;
  int s = 0;
  int x = 0;
  int y = 0;
  int outer = 0;  ///< |O|
  int f4 = 0;
  int f4_inner = 0;
  int x4 = 0;
  int selected = 0;
  bool planar = false;
  bool min_degree_five = false;
  bool fallback = false;
  std::vector<Check> checks;

  bool all_hold() const;
  const Check* find(std::string_view name) const;
};

/// Recomputes every intermediate inequality for a 4-coloring of a near
/// triangulation and the combinator result built from it. Never throws on
/// a failed inequality; failures are recorded in the checks.
/// Throws domtri::Error when the preconditions do not hold.
AccountingReport coloring_accounting(const PlaneGraph& g, const Coloring& c, const DominationResult& result);

/// As above, but throws InvariantBreach (payload: graph, coloring, sets)
/// when any check fails.
AccountingReport verify_coloring_accounting(const PlaneGraph& g, const Coloring& c,
                                            const DominationResult& result);

/// Text block of a graph, a coloring and named vertex sets, for breach payloads.
std::string instance_payload(const PlaneGraph& g, const Coloring* c,
                             const std::vector<std::pair<std::string, VertexSet>>& sets);

}  // namespace domtri
