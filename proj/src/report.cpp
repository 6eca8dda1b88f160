#include "domtri/report.h"

#include <array>
#include <fstream>
#include <sstream>

#include "domtri/error.h"

namespace domtri {

namespace {

using nlohmann::json;

Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("reports: bad rational '" + s + "'");
  }
}

template <class E, std::size_t N>
E parse_enum(const std::string& s, const std::array<E, N>& values) {
  for (E v : values)
    if (to_string(v) == s) return v;
  throw ParseError("reports: unknown value '" + s + "'");
}

constexpr std::array kRelations{Relation::Le, Relation::Lt, Relation::Eq};
constexpr std::array kBoundKinds{BoundKind::Theorem, BoundKind::Conjecture, BoundKind::Finding};
constexpr std::array kGraphKinds{GraphKind::PlanarTriangulation, GraphKind::NearTriangulation,
                                 GraphKind::ConnectedPlane, GraphKind::Invalid};

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
std::optional<int> optional_int(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

std::string seed_text(std::uint64_t seed) { return std::to_string(seed); }

}  // namespace

json report_to_json(const BoundReport& r, bool timings) {
  json j;
  j["id"] = r.id;
  j["family"] = r.family;
  j["seed"] = seed_text(r.seed);
  j["n"] = r.n;
  j["class"] = {{"kind", std::string(to_string(r.graph_class.kind))},
                {"min_degree", r.graph_class.min_degree},
                {"two_connected", r.graph_class.is_two_connected},
                {"all_degrees_even", r.graph_class.all_degrees_even},
                {"all_degrees_odd", r.graph_class.all_degrees_odd}};
  j["combinator"] = optional_int(r.combinator);
  j["combinator6"] = optional_int(r.combinator6);
  j["iota"] = optional_int(r.iota);
  j["gamma"] = optional_int(r.gamma);
  j["iota_status"] = r.iota_status;
  j["gamma_status"] = r.gamma_status;
  json bounds = json::array();
  for (const BoundRecord& b : r.bounds)
    bounds.push_back({{"bound", b.bound},
                      {"kind", std::string(to_string(b.kind))},
                      {"lhs", b.lhs},
                      {"relation", std::string(to_string(b.relation))},
                      {"rhs", format_rational(b.rhs)},
                      {"holds", b.holds}});
  j["bounds"] = bounds;
  json checks = json::array();
  for (const CheckRecord& c : r.checks)
    checks.push_back({{"check", c.check.name},
                      {"kind", c.kind == CheckKind::Invariant ? "invariant" : "finding"},
                      {"lhs", format_rational(c.check.lhs)},
                      {"relation", std::string(to_string(c.check.relation))},
                      {"rhs", format_rational(c.check.rhs)},
                      {"holds", c.check.holds}});
  j["checks"] = checks;
  json breaches = json::array();
  for (const Breach& b : r.breaches) breaches.push_back({{"what", b.what}, {"payload", b.payload}});
  j["breaches"] = breaches;
  j["errors"] = r.errors;
  j["graph"] = r.pgr;
  if (timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

BoundReport report_from_json(const json& j) {
  try {
    BoundReport r;
    r.id = j.at("id").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.seed = std::stoull(j.at("seed").get<std::string>());
    r.n = j.at("n").get<int>();
    const json& c = j.at("class");
    r.graph_class.kind = parse_enum(c.at("kind").get<std::string>(), kGraphKinds);
    r.graph_class.min_degree = c.at("min_degree").get<int>();
    r.graph_class.is_two_connected = c.at("two_connected").get<bool>();
    r.graph_class.all_degrees_even = c.at("all_degrees_even").get<bool>();
    r.graph_class.all_degrees_odd = c.at("all_degrees_odd").get<bool>();
    r.combinator = optional_int(j.at("combinator"));
    r.combinator6 = optional_int(j.at("combinator6"));
    r.iota = optional_int(j.at("iota"));
    r.gamma = optional_int(j.at("gamma"));
    r.iota_status = j.at("iota_status").get<std::string>();
    r.gamma_status = j.at("gamma_status").get<std::string>();
    for (const json& b : j.at("bounds"))
      r.bounds.push_back(BoundRecord{b.at("bound").get<std::string>(),
                                     parse_enum(b.at("kind").get<std::string>(), kBoundKinds),
                                     b.at("lhs").get<long long>(),
                                     parse_enum(b.at("relation").get<std::string>(), kRelations),
                                     parse_rational(b.at("rhs").get<std::string>()), b.at("holds").get<bool>()});
    for (const json& x : j.at("checks")) {
      Check chk{x.at("check").get<std::string>(), parse_rational(x.at("lhs").get<std::string>()),
                parse_enum(x.at("relation").get<std::string>(), kRelations),
                parse_rational(x.at("rhs").get<std::string>()), x.at("holds").get<bool>()};
      r.checks.push_back({chk, x.at("kind").get<std::string>() == "finding" ? CheckKind::Finding
                                                                              : CheckKind::Invariant});
    }
    for (const json& b : j.at("breaches"))
      r.breaches.push_back({b.at("what").get<std::string>(), b.at("payload").get<std::string>()});
    r.errors = j.at("errors").get<std::vector<std::string>>();
    r.pgr = j.value("graph", std::string{});
    r.runtime_ms = j.value("runtime_ms", 0.0);
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("reports: ") + e.what());
  }
}

std::string emit_structured(const std::vector<BoundReport>& reports, bool timings) {
  json doc;
  doc["format"] = "domtri-reports";
  doc["version"] = 1;
  doc["reports"] = json::array();
  for (const BoundReport& r : reports) doc["reports"].push_back(report_to_json(r, timings));
  return doc.dump(2) + "\n";
}

std::vector<BoundReport> parse_structured(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("reports: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", std::string{}) != "domtri-reports")
    throw ParseError("reports: not a domtri-reports document");
  std::vector<BoundReport> out;
  for (const json& r : doc.at("reports")) out.push_back(report_from_json(r));
  return out;
}

std::vector<BoundReport> read_structured_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_structured(os.str());
}

std::string emit_tabular(const std::vector<BoundReport>& reports, bool timings) {
  std::ostringstream os;
  os << "family\tn\tseed\tbound\tlhs\trhs\tholds\truntime_ms\n";
  for (const BoundReport& r : reports) {
    std::string runtime = "-";
    if (timings) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(3);
      t << r.runtime_ms;
      runtime = t.str();
    }
    for (const BoundRecord& b : r.bounds)
      os << r.family << '\t' << r.n << '\t' << r.seed << '\t' << b.bound << '\t' << b.lhs << '\t'
         << format_rational(b.rhs) << '\t' << (b.holds ? "true" : "false") << '\t' << runtime << '\n';
  }
  return os.str();
}

std::string emit(const std::vector<BoundReport>& reports, ReportFormat format, bool timings) {
  return format == ReportFormat::Structured ? emit_structured(reports, timings) : emit_tabular(reports, timings);
}

void emit_to_file(const std::vector<BoundReport>& reports, ReportFormat format, const std::filesystem::path& path,
                  bool timings) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << emit(reports, format, timings);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace domtri
