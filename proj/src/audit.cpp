#include "domtri/audit.h"

#include <sstream>

namespace domtri {

AuditSummary audit_conjectures(const std::vector<BoundReport>& reports) {
  AuditSummary s;
  for (const BoundReport& r : reports) {
    if (r.graph_class.kind != GraphKind::PlanarTriangulation) continue;
    if (r.gamma) {
      ++s.gamma_audited;
      const Rational bound(r.n, 4);
      if (Rational(*r.gamma) > bound)
        s.gamma_annotations.push_back({"gamma_le_n/4", r.id, r.family, r.n, *r.gamma, bound, r.pgr});
      else if (Rational(*r.gamma) == bound)
        s.gamma_tight.push_back(r.id);
    }
    if (r.iota) {
      ++s.iota_audited;
      const Rational bound(r.n, 3);
      if (Rational(*r.iota) > bound)
        s.iota_candidates.push_back({"iota_le_n/3", r.id, r.family, r.n, *r.iota, bound, r.pgr});
      else if (Rational(*r.iota) == bound)
        s.iota_tight.push_back(r.id);
    }
  }
  return s;
}

std::string AuditSummary::to_text() const {
  std::ostringstream os;
  os << "gamma <= n/4: " << gamma_audited << " triangulations audited, " << gamma_tight.size() << " tight, "
     << gamma_annotations.size() << " above the bound (annotated, small n)\n";
  for (const ConjectureHit& h : gamma_annotations)
    os << "  note " << h.id << " n=" << h.n << " gamma=" << h.value << " n/4=" << format_rational(h.bound) << '\n';
  for (const std::string& id : gamma_tight) os << "  tight " << id << '\n';
  os << "iota <= n/3: " << iota_audited << " triangulations audited, " << iota_tight.size() << " tight, "
     << iota_candidates.size() << " counterexample candidates\n";
  for (const std::string& id : iota_tight) os << "  tight " << id << '\n';
  for (const ConjectureHit& h : iota_candidates) {
    os << "  CANDIDATE " << h.id << " n=" << h.n << " iota=" << h.value << " n/3=" << format_rational(h.bound)
       << '\n';
    std::istringstream payload(h.payload);
    for (std::string line; std::getline(payload, line);) os << "    " << line << '\n';
  }
  return os.str();
}

}  // namespace domtri
