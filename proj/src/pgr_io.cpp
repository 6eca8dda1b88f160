#include "domtri/pgr_io.h"

#include <fstream>
#include <sstream>

#include "domtri/error.h"

namespace domtri {
namespace {

std::vector<long long> parse_ints(std::string_view text, int line_no) {
  std::vector<long long> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      std::ostringstream os;
      os << "pgr line " << line_no << ": expected integer, got '" << tok << "'";
      throw ParseError(os.str());
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::string to_pgr(const PlaneGraph& g) {
  std::ostringstream os;
  os << "pgr 1 " << g.vertex_count();
  for (VertexId v : g.outer_face().boundary) os << ' ' << v;
  os << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << v << ':';
    for (VertexId w : g.rotation(v)) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

PlaneGraph parse_pgr(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  std::vector<VertexId> outer;
  std::vector<std::vector<VertexId>> rot;
  std::vector<char> seen;
  int rows = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string magic;
      hs >> magic;
      if (magic != "pgr") throw ParseError("pgr: missing 'pgr' header");
      std::string rest;
      std::getline(hs, rest);
      auto nums = parse_ints(rest, line_no);
      if (nums.size() < 2 || nums[0] != 1) throw ParseError("pgr: unsupported version");
      n = nums[1];
      if (n <= 0) throw ParseError("pgr: vertex count must be positive");
      for (std::size_t i = 2; i < nums.size(); ++i) outer.push_back(static_cast<VertexId>(nums[i]));
      rot.assign(n, {});
      seen.assign(n, 0);
      have_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      std::ostringstream os;
      os << "pgr line " << line_no << ": expected '<id>: <neighbours>'";
      throw ParseError(os.str());
    }
    auto id = parse_ints(std::string_view(line).substr(0, colon), line_no);
    if (id.size() != 1 || id[0] < 0 || id[0] >= n) {
      std::ostringstream os;
      os << "pgr line " << line_no << ": bad vertex id";
      throw ParseError(os.str());
    }
    if (seen[id[0]]) {
      std::ostringstream os;
      os << "pgr line " << line_no << ": vertex " << id[0] << " listed twice";
      throw ParseError(os.str());
    }
    seen[id[0]] = 1;
    for (long long w : parse_ints(std::string_view(line).substr(colon + 1), line_no))
      rot[id[0]].push_back(static_cast<VertexId>(w));
    ++rows;
  }
  if (!have_header) throw ParseError("pgr: empty input");
  if (rows != n) throw ParseError("pgr: expected one rotation line per vertex");
  std::optional<std::vector<VertexId>> hint;
  if (!outer.empty()) hint = outer;
  try {
    return PlaneGraph::from_rotations(std::move(rot), hint);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("pgr: ") + e.what());
  }
}

PlaneGraph read_pgr_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pgr(buf.str());
}

void write_pgr_file(const std::filesystem::path& path, const PlaneGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_pgr(g);
}

}  // namespace domtri
