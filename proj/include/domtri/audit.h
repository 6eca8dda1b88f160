#pragma once

#include <string>
#include <vector>

#include "domtri/analysis.h"

namespace domtri {

/// One planar triangulation whose exact value exceeds a conjectured bound.
struct ConjectureHit {
  std::string conjecture;  ///< "gamma_le_n/4" or "iota_le_n/3"
  std::string id;
  std::string family;
  int n = 0;
  int value = 0;
  Rational bound;
  std::string payload;  ///< the graph, for replay
};

struct AuditSummary {
  int gamma_audited = 0;  ///< planar triangulations with exact gamma
  int iota_audited = 0;   ///< planar triangulations with exact iota
  /// gamma > n/4: recorded, never alarmed, since the conjecture is only
  /// claimed for large n and no threshold is given.
  std::vector<ConjectureHit> gamma_annotations;
  /// iota > n/3: candidate counterexamples.
  std::vector<ConjectureHit> iota_candidates;
  std::vector<std::string> gamma_tight;  ///< ids with gamma = n/4 exactly
  std::vector<std::string> iota_tight;   ///< ids with iota = n/3 exactly

  bool alarmed() const { return !iota_candidates.empty(); }
  std::string to_text() const;
};

/// Reports without an exact value, or not on a planar triangulation, are
/// ignored.
AuditSummary audit_conjectures(const std::vector<BoundReport>& reports);

}  // namespace domtri
