#include "domtri/coloring.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include "domtri/error.h"

namespace domtri {

Coloring::Coloring(int k, std::vector<int> assignment) : k_(k), assignment_(std::move(assignment)) {
  if (k < 1) throw Error("coloring needs at least one class");
  for (int c : assignment_)
    if (c < kUncolored || c >= k) throw Error("coloring: class index out of range");
}

bool Coloring::is_total() const {
  return std::none_of(assignment_.begin(), assignment_.end(), [](int c) { return c == kUncolored; });
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<std::vector<VertexId>> members(k_);
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (assignment_[v] >= 0) members[assignment_[v]].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(k_);
  for (auto& m : members) out.emplace_back(std::move(m));
  return out;
}

std::vector<int> class_sizes(const Coloring& c) {
  std::vector<int> sizes(c.class_count(), 0);
  for (int x : c.assignment())
    if (x >= 0) ++sizes[x];
  return sizes;
}

namespace {

void require_total(const PlaneGraph& g, const Coloring& c) {
  if (c.vertex_count() != g.vertex_count()) throw Error("coloring does not match the graph size");
  if (!c.is_total()) throw Error("coloring is partial");
}

void require_proper(const PlaneGraph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error("coloring is not proper");
}

int distinct_neighbor_classes(const PlaneGraph& g, const Coloring& c, VertexId v) {
  std::vector<char> seen(c.class_count(), 0);
  int count = 0;
  for (VertexId w : g.rotation(v))
    if (!seen[c[w]]) {
      seen[c[w]] = 1;
      ++count;
    }
  return count;
}

}  // namespace

bool is_proper(const PlaneGraph& g, const Coloring& c) {
  require_total(g, c);
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

bool is_r_dynamic(const PlaneGraph& g, const Coloring& c, int r) {
  require_proper(g, c);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (distinct_neighbor_classes(g, c, v) < std::min(r, g.degree(v))) return false;
  return true;
}

bool is_acyclic(const PlaneGraph& g, const Coloring& c) {
  require_proper(g, c);
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < c.class_count(); ++i)
    for (int j = i + 1; j < c.class_count(); ++j) {
      std::iota(parent.begin(), parent.end(), 0);
      for (auto [u, v] : g.edges()) {
        const bool in_pair = (c[u] == i || c[u] == j) && (c[v] == i || c[v] == j);
        if (!in_pair) continue;
        const int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
      }
    }
  return true;
}

MissingColors missing_colors(const PlaneGraph& g, const Coloring& c, VertexId v) {
  require_proper(g, c);
  std::vector<char> seen(c.class_count(), 0);
  seen[c[v]] = 1;
  for (VertexId w : g.rotation(v)) seen[c[w]] = 1;
  MissingColors m{v, {}};
  for (int i = 0; i < c.class_count(); ++i)
    if (!seen[i]) m.classes.push_back(i);
  return m;
}

Coloring permute_classes(const Coloring& c, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != c.class_count()) throw Error("permutation has the wrong size");
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= c.class_count() || hit[p]) throw Error("permutation is not a bijection");
    hit[p] = 1;
  }
  std::vector<int> out(c.assignment());
  for (int& x : out)
    if (x >= 0) x = perm[x];
  return Coloring(c.class_count(), std::move(out));
}

// --- four coloring ---------------------------------------------------------------

namespace {

class FourColorSearch {
 public:
  explicit FourColorSearch(const PlaneGraph& g)
      : g_(g), n_(g.vertex_count()), color_(n_, -1), seen_(n_, std::array<int, 4>{}) {}

  std::vector<int> run() {
    if (!assign(0)) throw Error("four_coloring: search exhausted without a proper coloring");
    return color_;
  }

 private:
  static constexpr long long kNodeBudget = 200'000'000;

  int saturation(VertexId v) const {
    int s = 0;
    for (int c = 0; c < 4; ++c) s += seen_[v][c] > 0;
    return s;
  }

  VertexId pick() const {
    VertexId best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (VertexId v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int sat = saturation(v);
      int deg = 0;
      for (VertexId w : g_.rotation(v)) deg += color_[w] < 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void set(VertexId v, int c, int delta) {
    for (VertexId w : g_.rotation(v)) seen_[w][c] += delta;
  }

  bool assign(int colored) {
    if (colored == n_) return true;
    if (++nodes_ > kNodeBudget) throw Error("four_coloring: node budget exhausted");
    const VertexId v = pick();
    for (int c = 0; c < 4; ++c) {
      if (seen_[v][c]) continue;
      color_[v] = c;
      set(v, c, +1);
      bool dead = false;
      for (VertexId w : g_.rotation(v))
        if (color_[w] < 0 && saturation(w) == 4) dead = true;
      if (!dead && assign(colored + 1)) return true;
      set(v, c, -1);
      color_[v] = -1;
    }
    return false;
  }

  const PlaneGraph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<std::array<int, 4>> seen_;
  long long nodes_ = 0;
};

}  // namespace

Coloring four_coloring(const PlaneGraph& g) { return Coloring(4, FourColorSearch(g).run()); }

// --- constructive colorings --------------------------------------------------------

Coloring stacked_four_coloring(const PlaneGraph& g, const BuildTrace& trace) {
  if (trace.kind != TraceKind::Stacked) throw Error("stacked_four_coloring: trace is not stacked");
  if (!(replay(trace) == g)) throw Error("stacked_four_coloring: trace does not describe the graph");
  std::vector<int> color(g.vertex_count(), Coloring::kUncolored);
  color[0] = 0;
  color[1] = 1;
  color[2] = 2;
  for (const auto& step : trace.steps) {
    const int used = color[step.face[0]] + color[step.face[1]] + color[step.face[2]];
    color[step.inserted.front()] = 6 - used;
  }
  return Coloring(4, std::move(color));
}

Coloring rec_eulerian_six_coloring(const PlaneGraph& g, const BuildTrace& trace) {
  if (trace.kind != TraceKind::Eulerian) throw Error("rec_eulerian_six_coloring: trace is not Eulerian");
  if (!(replay(trace) == g))
    throw Error("rec_eulerian_six_coloring: trace does not describe the graph");
  const int n = g.vertex_count();
  std::vector<int> color(n, Coloring::kUncolored);
  std::vector<std::vector<VertexId>> adj(n);
  auto link = [&](VertexId u, VertexId v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  link(0, 1);
  link(1, 2);
  link(2, 0);
  color[0] = 0;
  color[1] = 1;
  color[2] = 2;

  auto missing = [&](VertexId v) {
    std::array<char, 6> seen{};
    seen[color[v]] = 1;
    for (VertexId w : adj[v]) seen[color[w]] = 1;
    std::vector<int> out;
    for (int i = 0; i < 6; ++i)
      if (!seen[i]) out.push_back(i);
    return out;
  };

  for (std::size_t step_no = 0; step_no < trace.steps.size(); ++step_no) {
    const BuildStep& step = trace.steps[step_no];
    const auto [x, y, z] = step.face;
    const VertexId a = step.inserted[0], b = step.inserted[1], c = step.inserted[2];
    const std::array<VertexId, 3> host{x, y, z};
    std::array<std::vector<int>, 3> lack{};
    if (step_no > 0)
      for (int i = 0; i < 3; ++i) lack[i] = missing(host[i]);

    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    do {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        ok = perm[color[host[i]]] == i;
        for (int l : lack[i]) ok = ok && perm[l] == 3 + i;
      }
      if (ok) {
        found = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!found) {
      std::ostringstream os;
      os << "rec_eulerian_six_coloring: no admissible relabelling at step " << step_no << " (face "
         << x << ' ' << y << ' ' << z << ")";
      throw InvariantBreach(os.str());
    }
    for (int& col : color)
      if (col >= 0) col = perm[col];
    color[a] = 4;
    color[b] = 5;
    color[c] = 3;
    link(a, b);
    link(b, c);
    link(c, a);
    link(a, y);
    link(a, z);
    link(b, z);
    link(b, x);
    link(c, x);
    link(c, y);
  }
  return Coloring(6, std::move(color));
}

// --- text format --------------------------------------------------------------------

std::string coloring_to_text(const Coloring& c) {
  std::ostringstream os;
  os << "# k " << c.class_count() << '\n';
  for (VertexId v = 0; v < c.vertex_count(); ++v) os << v << ' ' << c[v] << '\n';
  return os.str();
}

Coloring parse_coloring(std::string_view text, int vertex_count) {
  std::istringstream is{std::string(text)};
  std::string line;
  int k = -1;
  std::vector<int> color(vertex_count, Coloring::kUncolored);
  int max_class = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      if (ls >> key && key == "k" && !(ls >> k)) throw ParseError("coloring: bad '# k' line");
      continue;
    }
    long long v = 0;
    int cls = 0;
    try {
      v = std::stoll(first);
    } catch (const std::exception&) {
      throw ParseError("coloring: bad vertex id '" + first + "'");
    }
    if (!(ls >> cls) || v < 0 || v >= vertex_count || cls < 0)
      throw ParseError("coloring: expected '<vertex> <class>' with valid ids");
    if (color[v] != Coloring::kUncolored) throw ParseError("coloring: vertex listed twice");
    color[v] = cls;
    max_class = std::max(max_class, cls);
  }
  if (k < 0) k = max_class + 1;
  if (max_class >= k) throw ParseError("coloring: class index exceeds k");
  return Coloring(std::max(k, 1), std::move(color));
}

Coloring read_coloring_file(const std::filesystem::path& path, int vertex_count) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_coloring(buf.str(), vertex_count);
}

}  // namespace domtri
