#include "domtri/trace_io.h"

#include <fstream>
#include <sstream>

#include "domtri/error.h"
#include "json.hpp"

namespace domtri {

using nlohmann::json;

std::string trace_to_json(const BuildTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step;
    step["face"] = s.face;
    step["inserted"] = s.inserted;
    if (trace.kind == TraceKind::Eulerian) {
      json pairs = json::array();
      for (auto [a, x] : opposite_pairs(s)) pairs.push_back({a, x});
      step["pairs"] = pairs;
    }
    steps.push_back(std::move(step));
  }
  json doc;
  doc["format"] = "domtri-trace";
  doc["version"] = 1;
  doc["kind"] = trace.kind == TraceKind::Stacked ? "stacked" : "eulerian";
  doc["steps"] = std::move(steps);
  return doc.dump(1) + "\n";
}

BuildTrace trace_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "domtri-trace" || doc.at("version") != 1)
      throw ParseError("trace: unsupported format");
    BuildTrace t;
    const std::string kind = doc.at("kind");
    if (kind == "stacked") t.kind = TraceKind::Stacked;
    else if (kind == "eulerian") t.kind = TraceKind::Eulerian;
    else throw ParseError("trace: unknown kind '" + kind + "'");
    const std::size_t width = t.kind == TraceKind::Stacked ? 1 : 3;
    for (const auto& s : doc.at("steps")) {
      BuildStep step;
      step.face = s.at("face").get<std::array<VertexId, 3>>();
      step.inserted = s.at("inserted").get<std::vector<VertexId>>();
      if (step.inserted.size() != width) throw ParseError("trace: wrong number of inserted vertices");
      t.steps.push_back(std::move(step));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("trace: ") + e.what());
  }
}

BuildTrace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return trace_from_json(buf.str());
}

void write_trace_file(const std::filesystem::path& path, const BuildTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << trace_to_json(trace);
}

}  // namespace domtri
