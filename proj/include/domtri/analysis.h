#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domtri/accounting.h"
#include "domtri/bounds.h"
#include "domtri/generators.h"

namespace domtri {

/// One graph of a sweep, with whatever construction history its family has.
struct GraphItem {
  std::string family;
  std::string id;
  std::uint64_t seed = 0;
  PlaneGraph graph;
  std::optional<BuildTrace> trace;
};

struct AnalysisOptions {
  OracleLimit iota_limit{35};
  OracleLimit gamma_limit{24};
};

struct BoundRecord {
  std::string bound;
  BoundKind kind = BoundKind::Theorem;
  long long lhs = 0;
  Relation relation = Relation::Le;
  Rational rhs;
  bool holds = false;
};

/// invariant: must hold (failure is a breach). finding: reported only.
enum class CheckKind { Invariant, Finding };

struct CheckRecord {
  Check check;
  CheckKind kind = CheckKind::Invariant;
};

struct Breach {
  std::string what;
  std::string payload;
};

struct BoundReport {
  std::string id;
  std::string family;
  std::uint64_t seed = 0;
  int n = 0;
  GraphClass graph_class;
  std::optional<int> combinator;
  std::optional<int> combinator6;
  std::optional<int> iota;
  std::optional<int> gamma;
  std::string iota_status = "skipped";  ///< exact, refused or skipped
  std::string gamma_status = "skipped";
  std::vector<BoundRecord> bounds;
  std::vector<CheckRecord> checks;
  std::vector<Breach> breaches;
  std::vector<std::string> errors;
  double runtime_ms = 0.0;
  std::string pgr;  ///< the analysed graph, for replaying candidates

  bool ok() const { return breaches.empty() && errors.empty(); }
};

/// Evaluates a registered bound at this report's n.
BoundRecord evaluate(const BoundSpec& spec, int n, long long lhs);

/// Classifies, colors, runs the combinator and the oracles within limits,
/// every applicable invariant check and every applicable bound. Failures
/// are recorded in the report; nothing is thrown for per-graph problems.
BoundReport analyze(const GraphItem& item, const AnalysisOptions& options = {});

/// Odd-degree observations for a 4-coloring of a planar triangulation.
struct OddDegreeRecord {
  Rational alpha;                 ///< fraction of odd-degree vertices
  bool all_classes_dominating = false;
  bool odd_vertices_dominated_by_all = false;  ///< no odd vertex in any U_i
  int combinator = 0;
  Rational alpha_bound;           ///< (2 - alpha) n / 4
  bool combinator_within = false;
  std::optional<int> iota;
  std::optional<bool> iota_within;
};

OddDegreeRecord odd_degree_analysis(const PlaneGraph& g, const Coloring& c,
                                    std::optional<int> exact_iota_value = std::nullopt);

}  // namespace domtri
