#include "domtri/plane_graph.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "domtri/error.h"

namespace domtri {
namespace {

void rotate_to_min(std::vector<VertexId>& rot) {
  if (rot.empty()) return;
  auto it = std::min_element(rot.begin(), rot.end());
  std::rotate(rot.begin(), it, rot.end());
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

std::vector<VertexId> canonical_walk(std::span<const VertexId> walk) {
  std::vector<VertexId> best(walk.begin(), walk.end());
  std::vector<VertexId> cand(best);
  for (std::size_t r = 1; r < walk.size(); ++r) {
    std::rotate(cand.begin(), cand.begin() + 1, cand.end());
    if (cand < best) best = cand;
  }
  return best;
}

// --- construction ------------------------------------------------------------

void PlaneGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) {
    std::ostringstream os;
    os << "unknown vertex id " << v;
    throw Error(os.str());
  }
}

std::span<const VertexId> PlaneGraph::rotation(VertexId v) const {
  check_vertex(v);
  return rotations_[v];
}

int PlaneGraph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(rotations_[v].size());
}

int PlaneGraph::rotation_index(VertexId v, VertexId neighbor) const {
  const auto& rot = rotations_[v];
  auto it = std::find(rot.begin(), rot.end(), neighbor);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return rotation_index(u, v) >= 0;
}

int PlaneGraph::dart_index(VertexId from, VertexId to) const {
  int pos = rotation_index(from, to);
  if (pos < 0) {
    std::ostringstream os;
    os << "no edge " << from << "-" << to;
    throw Error(os.str());
  }
  return dart_offset_[from] + pos;
}

FaceId PlaneGraph::face_of_dart(VertexId from, VertexId to) const {
  check_vertex(from);
  check_vertex(to);
  return dart_face_[dart_index(from, to)];
}

FaceId PlaneGraph::face_of_isolated(VertexId v) const {
  check_vertex(v);
  if (isolated_face_[v] < 0) throw Error("vertex is not isolated");
  return isolated_face_[v];
}

std::vector<std::pair<VertexId, VertexId>> PlaneGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : rotations_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void PlaneGraph::build() {
  const int n = vertex_count();
  if (n == 0) throw Error("plane graph needs at least one vertex");

  for (VertexId v = 0; v < n; ++v) {
    auto& rot = rotations_[v];
    for (VertexId w : rot) {
      if (w < 0 || w >= n) {
        std::ostringstream os;
        os << "rotation of " << v << " references unknown vertex " << w;
        throw Error(os.str());
      }
      if (w == v) {
        std::ostringstream os;
        os << "loop at vertex " << v;
        throw Error(os.str());
      }
    }
    std::vector<VertexId> sorted(rot);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      std::ostringstream os;
      os << "parallel edges at vertex " << v;
      throw Error(os.str());
    }
    rotate_to_min(rot);
  }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : rotations_[v])
      if (rotation_index(w, v) < 0) {
        std::ostringstream os;
        os << "asymmetric adjacency: " << v << " lists " << w << " but not conversely";
        throw Error(os.str());
      }

  dart_offset_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    dart_offset_[v + 1] = dart_offset_[v] + static_cast<int>(rotations_[v].size());
  const int darts = dart_offset_[n];
  edge_count_ = darts / 2;

  dart_face_.assign(darts, -1);
  faces_.clear();
  for (VertexId u0 = 0; u0 < n; ++u0) {
    for (std::size_t p = 0; p < rotations_[u0].size(); ++p) {
      if (dart_face_[dart_offset_[u0] + p] >= 0) continue;
      const FaceId id = static_cast<FaceId>(faces_.size());
      Face face;
      face.id = id;
      VertexId u = u0;
      VertexId v = rotations_[u0][p];
      for (int guard = 0;; ++guard) {
        if (guard > darts) throw Error("face walk does not close");
        const int d = dart_offset_[u] + rotation_index(u, v);
        if (dart_face_[d] >= 0) {
          if (dart_face_[d] != id) throw Error("face walk entered a foreign face");
          break;
        }
        dart_face_[d] = id;
        face.boundary.push_back(u);
        const auto& rv = rotations_[v];
        const int deg = static_cast<int>(rv.size());
        const VertexId w = rv[wrap(rotation_index(v, u) - 1, deg)];
        u = v;
        v = w;
      }
      face.degree = static_cast<int>(face.boundary.size());
      face.boundary = canonical_walk(face.boundary);
      faces_.push_back(std::move(face));
    }
  }
  isolated_face_.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (!rotations_[v].empty()) continue;
    isolated_face_[v] = static_cast<FaceId>(faces_.size());
    faces_.push_back(Face{static_cast<FaceId>(faces_.size()), {}, 0});
  }

  std::vector<int> comp(n, -1);
  component_count_ = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[s] = component_count_;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : rotations_[u])
        if (comp[w] < 0) {
          comp[w] = component_count_;
          stack.push_back(w);
        }
    }
    ++component_count_;
  }

  const long long euler = static_cast<long long>(n) - edge_count_ + face_count();
  if (euler != 2LL * component_count_) {
    std::ostringstream os;
    os << "rotation system is not planar: V - E + F = " << euler << " over "
       << component_count_ << " component(s)";
    throw Error(os.str());
  }
}

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<VertexId>> rotations,
                                      std::optional<std::vector<VertexId>> outer_walk) {
  PlaneGraph g;
  g.rotations_ = std::move(rotations);
  g.build();
  if (outer_walk) {
    const auto want = canonical_walk(*outer_walk);
    auto it = std::find_if(g.faces_.begin(), g.faces_.end(),
                           [&](const Face& f) { return f.boundary == want; });
    if (it == g.faces_.end()) throw Error("outer face hint does not match any face walk");
    g.outer_ = it->id;
  } else {
    int best = -1;
    int count = 0;
    for (const Face& f : g.faces_) {
      if (f.degree > best) {
        best = f.degree;
        count = 1;
        g.outer_ = f.id;
      } else if (f.degree == best) {
        ++count;
      }
    }
    if (count != 1) g.outer_ = 0;
  }
  return g;
}

PlaneGraph PlaneGraph::with_outer_face(FaceId f) const {
  if (f < 0 || f >= face_count()) throw Error("with_outer_face: unknown face id");
  PlaneGraph g(*this);
  g.outer_ = f;
  return g;
}

PlaneGraph PlaneGraph::from_rotations_with_outer_dart(std::vector<std::vector<VertexId>> rotations,
                                                      VertexId from, VertexId to) {
  PlaneGraph g = from_rotations(std::move(rotations));
  return g.with_outer_face(g.face_of_dart(from, to));
}

std::vector<std::vector<VertexId>> PlaneGraph::rotations_from_faces(
    int vertex_count, std::span<const std::vector<VertexId>> faces) {
  std::vector<std::map<VertexId, VertexId>> next(vertex_count);
  for (const auto& walk : faces) {
    const int k = static_cast<int>(walk.size());
    for (int i = 0; i < k; ++i) {
      const VertexId v = walk[i];
      const VertexId after = walk[wrap(i + 1, k)];
      const VertexId before = walk[wrap(i - 1, k)];
      if (v < 0 || v >= vertex_count) throw Error("face references unknown vertex");
      auto [it, inserted] = next[v].emplace(after, before);
      if (!inserted && it->second != before) throw Error("inconsistent face orientation");
    }
  }
  std::vector<std::vector<VertexId>> rot(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (next[v].empty()) continue;
    VertexId cur = next[v].begin()->first;
    do {
      rot[v].push_back(cur);
      auto it = next[v].find(cur);
      if (it == next[v].end()) throw Error("vertex link is not a cycle");
      cur = it->second;
    } while (cur != rot[v].front() && rot[v].size() <= next[v].size());
    if (rot[v].size() != next[v].size()) throw Error("vertex link is not a single cycle");
  }
  return rot;
}

// --- classification ------------------------------------------------------------

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::PlanarTriangulation: return "PlanarTriangulation";
    case GraphKind::NearTriangulation: return "NearTriangulation";
    case GraphKind::ConnectedPlane: return "ConnectedPlane";
    case GraphKind::Invalid: return "Invalid";
  }
  return "Invalid";
}

namespace {

bool connected_without(const PlaneGraph& g, VertexId skip) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  VertexId start = skip == 0 ? 1 : 0;
  if (start >= n) return true;
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  if (skip >= 0) seen[skip] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.rotation(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n - (skip >= 0 ? 1 : 0);
}

}  // namespace

bool is_two_connected(const PlaneGraph& g) {
  if (g.vertex_count() < 3 || !g.is_connected()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!connected_without(g, v)) return false;
  return true;
}

GraphClass classify(const PlaneGraph& g) {
  GraphClass c;
  const int n = g.vertex_count();
  c.min_degree = n > 0 ? g.degree(0) : 0;
  c.all_degrees_even = true;
  c.all_degrees_odd = true;
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    c.min_degree = std::min(c.min_degree, d);
    if (d % 2) c.all_degrees_even = false;
    else c.all_degrees_odd = false;
  }
  c.is_two_connected = is_two_connected(g);
  if (!g.is_connected()) {
    c.kind = GraphKind::Invalid;
    return c;
  }
  const bool all_triangles =
      n >= 3 && std::all_of(g.faces().begin(), g.faces().end(),
                            [](const Face& f) { return f.degree == 3; });
  if (all_triangles) {
    c.kind = GraphKind::PlanarTriangulation;
    return c;
  }
  const bool inner_triangles =
      std::all_of(g.faces().begin(), g.faces().end(), [&](const Face& f) {
        return f.id == g.outer_face_id() || f.degree == 3;
      });
  c.kind = c.is_two_connected && inner_triangles ? GraphKind::NearTriangulation
                                                 : GraphKind::ConnectedPlane;
  return c;
}

std::map<int, int> face_degree_histogram(const PlaneGraph& g) {
  std::map<int, int> hist;
  for (const Face& f : g.faces()) ++hist[f.degree];
  return hist;
}

// --- neighbourhoods ---------------------------------------------------------------

VertexSet neighbors(const PlaneGraph& g, VertexId v) {
  auto rot = g.rotation(v);
  return VertexSet(std::vector<VertexId>(rot.begin(), rot.end()));
}

int degree(const PlaneGraph& g, VertexId v) { return g.degree(v); }

VertexSet open_neighborhood(const PlaneGraph& g, const VertexSet& s) {
  std::vector<bool> flag(g.vertex_count(), false);
  for (VertexId v : s)
    for (VertexId w : g.rotation(v)) flag[w] = true;
  return VertexSet::from_flags(flag);
}

VertexSet closed_neighborhood(const PlaneGraph& g, const VertexSet& s) {
  std::vector<bool> flag(g.vertex_count(), false);
  for (VertexId v : s) {
    for (VertexId w : g.rotation(v)) flag[w] = true;
    flag[v] = true;
  }
  return VertexSet::from_flags(flag);
}

// --- deletion -------------------------------------------------------------------

namespace {

// Face of h containing the wedge of g at `v` that opens towards rotation
// position `pos` of v (the corner between rot[pos-1] and rot[pos]).
FaceId corner_face(const PlaneGraph& g, const PlaneGraph& h, const std::vector<VertexId>& old_to_new,
                   VertexId v, int pos) {
  auto rot = g.rotation(v);
  const int deg = static_cast<int>(rot.size());
  for (int step = 0; step < deg; ++step) {
    const VertexId u = rot[wrap(pos + step, deg)];
    if (old_to_new[u] >= 0) return h.face_of_dart(old_to_new[u], old_to_new[v]);
  }
  return h.face_of_isolated(old_to_new[v]);
}

}  // namespace

DeletionResult delete_vertices(const PlaneGraph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  for (VertexId v : s)
    if (v >= n) throw Error("deletion set references unknown vertex");
  if (static_cast<int>(s.size()) == n) throw Error("cannot delete every vertex");

  std::vector<VertexId> old_to_new(n, -1);
  std::vector<VertexId> new_to_old;
  for (VertexId v = 0; v < n; ++v)
    if (!s.contains(v)) {
      old_to_new[v] = static_cast<VertexId>(new_to_old.size());
      new_to_old.push_back(v);
    }
  std::vector<std::vector<VertexId>> rot(new_to_old.size());
  for (std::size_t i = 0; i < new_to_old.size(); ++i)
    for (VertexId w : g.rotation(new_to_old[i]))
      if (old_to_new[w] >= 0) rot[i].push_back(old_to_new[w]);

  // Locate a corner of g's outer face at a surviving vertex.
  const auto& outer = g.outer_face().boundary;
  VertexId corner_v = -1;
  int corner_pos = 0;
  if (outer.empty()) {
    corner_v = new_to_old.front();
  } else {
    const int k = static_cast<int>(outer.size());
    for (int i = 0; i < k && corner_v < 0; ++i) {
      const VertexId u = outer[i];
      const VertexId v = outer[wrap(i + 1, k)];
      if (old_to_new[v] >= 0) {
        corner_v = v;
        corner_pos = g.rotation_index(v, u);
      }
    }
    if (corner_v < 0) {
      corner_v = new_to_old.front();
      corner_pos = 0;
    }
  }

  PlaneGraph h = PlaneGraph::from_rotations(rot);
  h = h.with_outer_face(corner_face(g, h, old_to_new, corner_v, corner_pos));

  DeletionResult result{h, new_to_old, old_to_new, h.is_connected(), {}};
  for (VertexId x : s) {
    FaceId f = -1;
    auto rx = g.rotation(x);
    for (VertexId v : rx) {
      if (old_to_new[v] < 0) continue;
      f = corner_face(g, result.graph, old_to_new, v, g.rotation_index(v, x) + 1);
      break;
    }
    result.containing_face.emplace_back(x, f);
  }
  return result;
}

PlaneGraph delete_edge(const PlaneGraph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw Error("delete_edge: not an edge");
  auto rot = g.rotations();
  std::erase(rot[u], v);
  std::erase(rot[v], u);
  const auto& outer = g.outer_face().boundary;
  const int k = static_cast<int>(outer.size());
  for (int i = 0; i < k; ++i) {
    const VertexId a = outer[i];
    const VertexId b = outer[wrap(i + 1, k)];
    if ((a == u && b == v) || (a == v && b == u)) continue;
    return PlaneGraph::from_rotations_with_outer_dart(std::move(rot), a, b);
  }
  return PlaneGraph::from_rotations(std::move(rot));
}

namespace {

struct FlipPlan {
  VertexId x = -1;
  VertexId y = -1;
};

FlipPlan plan_flip(const PlaneGraph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw Error("flip_edge: not an edge");
  const FaceId left = g.face_of_dart(u, v);
  const FaceId right = g.face_of_dart(v, u);
  if (left == g.outer_face_id() || right == g.outer_face_id())
    throw Error("flip_edge: edge lies on the outer face");
  if (g.face(left).degree != 3 || g.face(right).degree != 3)
    throw Error("flip_edge: edge is not shared by two triangles");
  auto rv = g.rotation(v);
  auto ru = g.rotation(u);
  FlipPlan p;
  p.x = rv[wrap(g.rotation_index(v, u) - 1, static_cast<int>(rv.size()))];
  p.y = ru[wrap(g.rotation_index(u, v) - 1, static_cast<int>(ru.size()))];
  if (p.x == p.y || g.has_edge(p.x, p.y))
    throw Error("flip_edge: flip would create a parallel edge");
  return p;
}

void insert_after(std::vector<VertexId>& rot, VertexId anchor, VertexId value) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, value);
}

}  // namespace

PlaneGraph flip_edge(const PlaneGraph& g, VertexId u, VertexId v) {
  const FlipPlan p = plan_flip(g, u, v);
  auto rot = g.rotations();
  std::erase(rot[u], v);
  std::erase(rot[v], u);
  insert_after(rot[p.x], u, p.y);
  insert_after(rot[p.y], v, p.x);
  return PlaneGraph::from_rotations(std::move(rot), g.outer_face().boundary);
}

bool is_flippable(const PlaneGraph& g, VertexId u, VertexId v) {
  try {
    plan_flip(g, u, v);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// --- neighbourhood structure ------------------------------------------------------------

namespace {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(std::vector<std::vector<char>> adj)
      : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), used_(n_, 0) {}

  std::optional<std::vector<int>> cycle() {
    if (n_ < 3) return std::nullopt;
    cycle_mode_ = true;
    path_ = {0};
    used_.assign(n_, 0);
    used_[0] = 1;
    if (extend()) return path_;
    return std::nullopt;
  }

  std::optional<std::vector<int>> path() {
    cycle_mode_ = false;
    for (int s = 0; s < n_; ++s) {
      path_ = {s};
      used_.assign(n_, 0);
      used_[s] = 1;
      if (extend()) return path_;
    }
    return std::nullopt;
  }

 private:
  bool feasible() const {
    const int end = path_.back();
    const int start = path_.front();
    for (int w = 0; w < n_; ++w) {
      if (used_[w]) continue;
      int free = 0;
      for (int z = 0; z < n_; ++z)
        if (adj_[w][z] && (!used_[z] || z == end || (cycle_mode_ && z == start))) ++free;
      if (free < (cycle_mode_ ? 2 : 1)) return false;
    }
    return true;
  }

  bool extend() {
    if (static_cast<int>(path_.size()) == n_)
      return !cycle_mode_ || adj_[path_.back()][path_.front()];
    if (!feasible()) return false;
    const int end = path_.back();
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || !adj_[end][w]) continue;
      used_[w] = 1;
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  std::vector<std::vector<char>> adj_;
  int n_;
  std::vector<char> used_;
  std::vector<int> path_;
  bool cycle_mode_ = true;
};

}  // namespace

NeighborhoodStructure neighborhood_structure(const PlaneGraph& g, VertexId v) {
  if (g.vertex_count() < 4) throw Error("neighborhood_structure: needs at least four vertices");
  if (!classify(g).is_near_triangulation())
    throw Error("neighborhood_structure: graph is not a near triangulation");
  auto rot = g.rotation(v);
  const std::vector<VertexId> local(rot.begin(), rot.end());
  const int d = static_cast<int>(local.size());
  std::vector<std::vector<char>> adj(d, std::vector<char>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && g.has_edge(local[i], local[j])) adj[i][j] = 1;

  HamiltonSearch search(adj);
  auto to_global = [&](const std::vector<int>& idx) {
    std::vector<VertexId> out;
    for (int i : idx) out.push_back(local[i]);
    return out;
  };
  if (auto c = search.cycle()) return {NeighborhoodShape::SpanningCycle, to_global(*c)};
  if (auto p = search.path()) {
    const auto& outer = g.outer_face();
    const bool on_outer =
        std::find(outer.boundary.begin(), outer.boundary.end(), v) != outer.boundary.end();
    if (!on_outer || outer.degree == 3) {
      std::ostringstream os;
      os << "vertex " << v << " has only a spanning path in its neighbourhood but is not on a "
         << "non-triangular outer face";
      throw InvariantBreach(os.str());
    }
    return {NeighborhoodShape::SpanningPath, to_global(*p)};
  }
  std::ostringstream os;
  os << "neighbourhood of vertex " << v << " has neither a spanning cycle nor a spanning path";
  throw InvariantBreach(os.str());
}

FacesInequality check_faces_inequality(const PlaneGraph& h) {
  if (!h.is_connected()) throw Error("check_faces_inequality: graph is not connected");
  long long f3 = 0, f4 = 0, f5 = 0, big = 0;
  for (const Face& f : h.faces()) {
    if (f.degree == 3) ++f3;
    else if (f.degree == 4) ++f4;
    else if (f.degree == 5) ++f5;
    else if (f.degree >= 6) ++big;
  }
  FacesInequality r;
  r.lhs = f4 + 2 * big;
  r.rhs = h.vertex_count() - 2;
  r.strengthened_rhs = static_cast<double>(r.rhs) - static_cast<double>(f3 + 3 * f5) / 2.0;
  r.holds = r.lhs <= r.rhs;
  r.strengthened_holds = 2 * r.lhs <= 2 * r.rhs - (f3 + 3 * f5);
  return r;
}

Degree4Structure degree4_structure(const PlaneGraph& g) {
  const int n = g.vertex_count();
  std::vector<bool> in(n, false);
  for (VertexId v = 0; v < n; ++v) in[v] = g.degree(v) == 4;
  Degree4Structure r;
  std::vector<bool> seen(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (!in[v] || seen[v]) continue;
    std::vector<VertexId> comp{v}, stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.rotation(u))
        if (in[w] && !seen[w]) {
          seen[w] = true;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    r.components.emplace_back(std::move(comp));
  }
  auto clique = [&](const VertexSet& c) {
    for (VertexId a : c)
      for (VertexId b : c)
        if (a < b && !g.has_edge(a, b)) return false;
    return true;
  };
  r.all_triangles = std::all_of(r.components.begin(), r.components.end(),
                                [&](const VertexSet& c) { return c.size() == 3 && clique(c); });
  r.all_small_cliques = std::all_of(r.components.begin(), r.components.end(),
                                    [&](const VertexSet& c) { return c.size() <= 3 && clique(c); });
  const VertexSet v4 = VertexSet::from_flags(in);
  if (static_cast<int>(v4.size()) == n) {
    r.max_per_face = n;
    return r;
  }
  const DeletionResult del = delete_vertices(g, v4);
  std::map<FaceId, int> per_face;
  for (auto [v, f] : del.containing_face) r.max_per_face = std::max(r.max_per_face, f < 0 ? 1 : ++per_face[f]);
  return r;
}

}  // namespace domtri
