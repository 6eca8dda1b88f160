#include "domtri/generators.h"

#include <algorithm>
#include <sstream>

#include "domtri/error.h"

namespace domtri {

Seed Seed::derive(std::uint64_t stream) const {
  // splitmix64 finaliser over (value, stream)
  std::uint64_t z = value + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Seed{z ^ (z >> 31)};
}

int BuildTrace::vertex_count() const {
  int n = 3;
  for (const auto& s : steps) n += static_cast<int>(s.inserted.size());
  return n;
}

std::array<std::pair<VertexId, VertexId>, 3> opposite_pairs(const BuildStep& step) {
  if (step.inserted.size() != 3) throw Error("opposite_pairs: not an Eulerian step");
  return {{{step.inserted[0], step.face[0]},
           {step.inserted[1], step.face[1]},
           {step.inserted[2], step.face[2]}}};
}

namespace {

using Tri = std::array<VertexId, 3>;

bool same_cyclic(const Tri& a, const Tri& b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
  return false;
}

void insert_after(std::vector<VertexId>& rot, VertexId anchor, std::initializer_list<VertexId> values) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end()) throw Error("builder: anchor missing from rotation");
  rot.insert(it + 1, values);
}

// Grows a triangulation from the base triangle by face insertions. Faces are
// kept as walks with the face on the left.
class TriangulationBuilder {
 public:
  TriangulationBuilder() : rot_{{1, 2}, {2, 0}, {0, 1}}, faces_{{0, 1, 2}, {0, 2, 1}}, outer_{0, 2, 1} {}

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  const std::vector<Tri>& faces() const { return faces_; }
  const Tri& outer() const { return outer_; }

  std::size_t find_face(const Tri& f) const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (same_cyclic(faces_[i], f)) return i;
    throw Error("builder: face not present");
  }

  BuildStep stack(std::size_t face_index) {
    const Tri f = faces_.at(face_index);
    const auto [a, b, c] = f;
    const VertexId w = vertex_count();
    rot_.push_back({a, b, c});
    insert_after(rot_[a], b, {w});
    insert_after(rot_[b], c, {w});
    insert_after(rot_[c], a, {w});
    replace(face_index, {Tri{a, b, w}, Tri{b, c, w}, Tri{c, a, w}});
    return BuildStep{f, {w}};
  }

  BuildStep eulerian(std::size_t face_index) {
    const Tri f = faces_.at(face_index);
    const auto [x, y, z] = f;
    const VertexId a = vertex_count();
    const VertexId b = a + 1;
    const VertexId c = a + 2;
    rot_.push_back({y, z, b, c});
    rot_.push_back({z, x, c, a});
    rot_.push_back({x, y, a, b});
    insert_after(rot_[x], y, {c, b});
    insert_after(rot_[y], z, {a, c});
    insert_after(rot_[z], x, {b, a});
    replace(face_index, {Tri{x, y, c}, Tri{y, z, a}, Tri{z, x, b}, Tri{x, c, b}, Tri{y, a, c},
                         Tri{z, b, a}, Tri{c, a, b}});
    return BuildStep{f, {a, b, c}};
  }

  PlaneGraph finish() const {
    return PlaneGraph::from_rotations(rot_, std::vector<VertexId>(outer_.begin(), outer_.end()));
  }

 private:
  void replace(std::size_t index, std::initializer_list<Tri> fresh) {
    const bool was_outer = same_cyclic(faces_[index], outer_);
    auto it = fresh.begin();
    faces_[index] = *it;
    if (was_outer) outer_ = *it;
    for (++it; it != fresh.end(); ++it) faces_.push_back(*it);
  }

  std::vector<std::vector<VertexId>> rot_;
  std::vector<Tri> faces_;
  Tri outer_;
};

std::size_t uniform_index(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

}  // namespace

PlaneGraph replay(const BuildTrace& trace) {
  TriangulationBuilder b;
  for (const BuildStep& step : trace.steps) {
    const std::size_t idx = b.find_face(step.face);
    const int next = b.vertex_count();
    const BuildStep done = trace.kind == TraceKind::Stacked ? b.stack(idx) : b.eulerian(idx);
    std::vector<VertexId> expect;
    for (std::size_t i = 0; i < done.inserted.size(); ++i) expect.push_back(next + static_cast<int>(i));
    if (step.inserted != expect || !same_cyclic(done.face, step.face))
      throw Error("replay: trace step does not match the construction order");
  }
  return b.finish();
}

PlaneGraph triangle() { return TriangulationBuilder().finish(); }

PlaneGraph k4() {
  TriangulationBuilder b;
  b.stack(0);
  return b.finish();
}

PlaneGraph octahedron() {
  TriangulationBuilder b;
  b.eulerian(0);
  return b.finish();
}

PlaneGraph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom; lower vertex 5+i
  // sits between upper i and upper i+1.
  std::vector<std::vector<VertexId>> faces;
  auto up = [](int i) { return 1 + ((i % 5) + 5) % 5; };
  auto lo = [](int i) { return 6 + ((i % 5) + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, up(i), up(i + 1)});
    faces.push_back({up(i + 1), up(i), lo(i)});
    faces.push_back({up(i + 1), lo(i), lo(i + 1)});
    faces.push_back({11, lo(i + 1), lo(i)});
  }
  auto rot = PlaneGraph::rotations_from_faces(12, faces);
  return PlaneGraph::from_rotations(std::move(rot), faces.front());
}

Generated planar_three_tree(int n, Seed seed) {
  if (n < 3) throw Error("planar_three_tree: n must be at least 3");
  auto rng = seed.engine();
  TriangulationBuilder b;
  BuildTrace trace{TraceKind::Stacked, {}};
  while (b.vertex_count() < n) trace.steps.push_back(b.stack(uniform_index(rng, b.faces().size())));
  return {b.finish(), std::move(trace)};
}

Generated recursive_eulerian(int t, Seed seed) {
  if (t < 0) throw Error("recursive_eulerian: t must be non-negative");
  auto rng = seed.engine();
  TriangulationBuilder b;
  BuildTrace trace{TraceKind::Eulerian, {}};
  for (int i = 0; i < t; ++i) trace.steps.push_back(b.eulerian(uniform_index(rng, b.faces().size())));
  return {b.finish(), std::move(trace)};
}

PlaneGraph diamond_chain(int k) {
  if (k < 2) throw Error("diamond_chain: k must be at least 2 (k = 1 needs parallel edges)");
  const int n = 7 * k;
  auto id_b = [](int i) { return 7 * i; };
  auto id_c = [](int i) { return 7 * i + 1; };
  auto id_d = [](int i) { return 7 * i + 2; };
  auto apex = [&](int i) { return id_d(((i - 1) % k + k) % k); };
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < k; ++i) {
    const VertexId a = apex(i), b = id_b(i), c = id_c(i), d = id_d(i);
    const VertexId r1 = 7 * i + 3, r2 = 7 * i + 4, r3 = 7 * i + 5, m4 = 7 * i + 6;
    // octahedron on triangle a b c: r3 misses a, r2 misses b, r1 misses c
    faces.push_back({a, b, r1});
    faces.push_back({b, c, r3});
    faces.push_back({c, a, r2});
    faces.push_back({a, r1, r2});
    faces.push_back({b, r3, r1});
    faces.push_back({c, r2, r3});
    faces.push_back({r1, r3, r2});
    // vertex 4 stacked into b d c
    faces.push_back({b, d, m4});
    faces.push_back({d, c, m4});
    faces.push_back({c, b, m4});
  }
  // Inner annulus boundary a0 c0 a1 c1 ... (counter-clockwise), fanned from c0.
  std::vector<VertexId> inner;
  std::vector<VertexId> outer;
  for (int i = 0; i < k; ++i) {
    inner.push_back(apex(i));
    inner.push_back(id_c(i));
    outer.push_back(apex(i));
    outer.push_back(id_b(i));
  }
  std::reverse(outer.begin(), outer.end());
  auto fan = [&](const std::vector<VertexId>& poly, VertexId hub) {
    const int m = static_cast<int>(poly.size());
    const int p = static_cast<int>(std::find(poly.begin(), poly.end(), hub) - poly.begin());
    for (int j = 1; j + 1 < m; ++j) faces.push_back({hub, poly[(p + j) % m], poly[(p + j + 1) % m]});
  };
  const std::size_t first_outer_fan = faces.size() + static_cast<std::size_t>(2 * k - 2);
  fan(inner, id_c(0));
  fan(outer, id_b(0));
  std::vector<std::vector<VertexId>> rot;
  try {
    rot = PlaneGraph::rotations_from_faces(n, faces);
    return PlaneGraph::from_rotations(std::move(rot), faces[first_outer_fan]);
  } catch (const Error& e) {
    throw Error(std::string("diamond_chain: construction is not a simple triangulation: ") + e.what());
  }
}

VertexSet diamond_chain_witness(int k) {
  std::vector<VertexId> ids;
  for (int i = 0; i < k; ++i) {
    ids.push_back(7 * i + 5);
    ids.push_back(7 * i + 6);
  }
  return VertexSet(std::move(ids));
}

PlaneGraph k4_chain(int k) {
  if (k < 2) throw Error("k4_chain: k must be at least 2");
  TriangulationBuilder b;
  std::vector<Tri> reserved{b.outer()};
  Tri host = b.faces()[0];
  for (int j = 1; j < k; ++j) {
    const BuildStep s = b.eulerian(b.find_face(host));
    const auto [x, y, z] = s.face;
    const VertexId a = s.inserted[0], bb = s.inserted[1], c = s.inserted[2];
    reserved.push_back(Tri{c, a, bb});
    host = Tri{x, y, c};
    (void)z;
  }
  for (const Tri& f : reserved) b.stack(b.find_face(f));
  return b.finish();
}

PlaneGraph random_triangulation(int n, Seed seed, int flip_walk) {
  if (n < 4) throw Error("random_triangulation: n must be at least 4");
  PlaneGraph g = planar_three_tree(n, seed).graph;
  auto rng = seed.derive(1).engine();
  for (int step = 0; step < flip_walk; ++step) {
    const auto edges = g.edges();
    const auto [u, v] = edges[uniform_index(rng, edges.size())];
    if (is_flippable(g, u, v)) g = flip_edge(g, u, v);
  }
  return g;
}

PlaneGraph near_triangulation_from(const PlaneGraph& g, VertexId v) {
  if (g.vertex_count() < 5) throw Error("near_triangulation_from: needs at least five vertices");
  if (classify(g).kind != GraphKind::PlanarTriangulation)
    throw Error("near_triangulation_from: input is not a planar triangulation");
  DeletionResult del = delete_vertices(g, VertexSet{v});
  const FaceId f = del.containing_face.front().second;
  return del.graph.with_outer_face(f);
}

namespace {

int min_degree(const PlaneGraph& g) {
  int d = g.vertex_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

// Candidate flips that change the degree of w: edges opposite w in its
// incident triangles (raise w) and edges at w (lower w).
std::vector<std::pair<VertexId, VertexId>> flips_near(const PlaneGraph& g, VertexId w, bool incident) {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto rot = g.rotation(w);
  const int d = static_cast<int>(rot.size());
  for (int i = 0; i < d; ++i) {
    const VertexId u = rot[i];
    const VertexId v = rot[(i + 1) % d];
    if (is_flippable(g, u, v)) out.emplace_back(u, v);
    if (incident && is_flippable(g, w, u)) out.emplace_back(w, u);
  }
  return out;
}

// Opposite apexes of the two triangles on edge uv.
std::pair<VertexId, VertexId> apexes(const PlaneGraph& g, VertexId u, VertexId v) {
  auto rv = g.rotation(v);
  auto ru = g.rotation(u);
  const int dv = static_cast<int>(rv.size());
  const int du = static_cast<int>(ru.size());
  return {rv[(g.rotation_index(v, u) - 1 + dv) % dv], ru[(g.rotation_index(u, v) - 1 + du) % du]};
}

}  // namespace

std::optional<PlaneGraph> min_degree5_sample(int n, Seed seed, int budget) {
  // 5n <= 2|E| = 6n - 12.
  if (n < 12) return std::nullopt;
  for (int attempt = 0; attempt < budget; ++attempt) {
    if (n == 12 && attempt == 0) return icosahedron();
    const Seed s = seed.derive(static_cast<std::uint64_t>(attempt));
    PlaneGraph g = random_triangulation(n, s, 2 * n);
    auto rng = s.derive(7).engine();
    for (int step = 0; step < 40 * n; ++step) {
      if (min_degree(g) >= 5) return g;
      std::vector<VertexId> low;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 5) low.push_back(v);
      const VertexId w = low[uniform_index(rng, low.size())];
      auto cands = flips_near(g, w, false);
      if (cands.empty()) continue;
      int best = -1;
      std::vector<std::pair<VertexId, VertexId>> top;
      for (auto [u, v] : cands) {
        const int score = (g.degree(u) > 5) + (g.degree(v) > 5);
        if (score > best) {
          best = score;
          top.clear();
        }
        if (score == best) top.emplace_back(u, v);
      }
      const auto [u, v] = top[uniform_index(rng, top.size())];
      g = flip_edge(g, u, v);
    }
  }
  return std::nullopt;
}

std::optional<PlaneGraph> all_odd_sample(int n, Seed seed, int budget) {
  // The number of odd-degree vertices is even, so n must be even.
  if (n < 4 || n % 2) return std::nullopt;
  for (int attempt = 0; attempt < budget; ++attempt) {
    const Seed s = seed.derive(static_cast<std::uint64_t>(attempt));
    PlaneGraph g = random_triangulation(n, s, 2 * n);
    auto rng = s.derive(11).engine();
    for (int step = 0; step < 40 * n; ++step) {
      std::vector<VertexId> even;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 0) even.push_back(v);
      if (even.empty()) return g;
      const VertexId w = even[uniform_index(rng, even.size())];
      auto cands = flips_near(g, w, true);
      if (cands.empty()) continue;
      int best = -100;
      std::vector<std::pair<VertexId, VertexId>> top;
      for (auto [u, v] : cands) {
        const auto [x, y] = apexes(g, u, v);
        int gain = 0;
        for (VertexId z : {u, v, x, y}) gain += g.degree(z) % 2 == 0 ? 1 : -1;
        if (gain > best) {
          best = gain;
          top.clear();
        }
        if (gain == best) top.emplace_back(u, v);
      }
      if (best <= 0 && std::uniform_int_distribution<int>(0, 3)(rng) != 0) {
        top = cands;
      }
      const auto [u, v] = top[uniform_index(rng, top.size())];
      g = flip_edge(g, u, v);
    }
  }
  return std::nullopt;
}

PlaneGraph random_connected_plane(int n, Seed seed, int removals) {
  PlaneGraph g = random_triangulation(n, seed, 2 * n);
  auto rng = seed.derive(3).engine();
  for (int tries = 0, removed = 0; removed < removals && tries < 4 * removals + 16; ++tries) {
    const auto edges = g.edges();
    if (edges.empty()) break;
    const auto [u, v] = edges[uniform_index(rng, edges.size())];
    PlaneGraph h = delete_edge(g, u, v);
    if (!h.is_connected()) continue;
    g = std::move(h);
    ++removed;
  }
  return g;
}

}  // namespace domtri
