#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "domtri/plane_graph.h"

namespace domtri {

/// Seed of a deterministic, splittable random stream.
struct Seed {
  std::uint64_t value = 0;

  /// Independent child stream; equal (seed, stream) pairs give equal children.
  Seed derive(std::uint64_t stream) const;
  std::mt19937_64 engine() const { return std::mt19937_64(value); }

  friend bool operator==(const Seed&, const Seed&) = default;
};

enum class TraceKind { Stacked, Eulerian };

/// One insertion into the face walk `face` (face on the left).
///
/// Stacked steps insert one vertex joined to all three face vertices.
/// Eulerian steps insert a triangle (a, b, c) where inserted[i] is the
/// vertex NOT joined to face[i]; these are the non-adjacent pairs of the
/// octahedron that the face and the new triangle induce.
struct BuildStep {
  std::array<VertexId, 3> face{};
  std::vector<VertexId> inserted;

  friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

/// Ordered insertion log starting from the triangle 0, 1, 2 whose outer
/// face walk is (0, 2, 1).
struct BuildTrace {
  TraceKind kind = TraceKind::Stacked;
  std::vector<BuildStep> steps;

  int vertex_count() const;
  friend bool operator==(const BuildTrace&, const BuildTrace&) = default;
};

struct Generated {
  PlaneGraph graph;
  BuildTrace trace;
};

/// Non-adjacent pairs {inserted[i], face[i]} of an Eulerian step.
std::array<std::pair<VertexId, VertexId>, 3> opposite_pairs(const BuildStep& step);

/// Rebuilds the graph a trace describes, vertex for vertex.
PlaneGraph replay(const BuildTrace& trace);

PlaneGraph triangle();
PlaneGraph k4();
/// Antipodal pairs are {0,3}, {1,4}, {2,5}.
PlaneGraph octahedron();
PlaneGraph icosahedron();

/// Stacks a degree-3 vertex into a uniformly chosen face (outer included)
/// until n vertices exist.
Generated planar_three_tree(int n, Seed seed);

/// t octahedral triangle insertions into uniformly chosen faces.
Generated recursive_eulerian(int t, Seed seed);

/// Circular chain of k seven-vertex diamond gadgets, annuli closed by fans.
/// Gadget i owns ids 7i .. 7i+6 = b, c, d, 1, 2, 3, 4; its apex is the d
/// vertex of gadget i-1.
PlaneGraph diamond_chain(int k);
/// The two-per-gadget independent dominating set {3, 4} of every gadget.
VertexSet diamond_chain_witness(int k);

/// Triangulation of k vertex-disjoint K4 copies, none nested in another.
PlaneGraph k4_chain(int k);

/// planar_three_tree(n, seed) followed by `flip_walk` uniformly proposed
/// edge flips; illegal proposals are skipped.
PlaneGraph random_triangulation(int n, Seed seed, int flip_walk);

/// g - v with the former neighbourhood cycle as outer face.
PlaneGraph near_triangulation_from(const PlaneGraph& g, VertexId v);

/// Best-effort search for a triangulation with minimum degree 5: flip
/// walks that raise low degrees, restarted up to `budget` times. The
/// icosahedron is the first candidate for n = 12.
std::optional<PlaneGraph> min_degree5_sample(int n, Seed seed, int budget);

/// Best-effort search for a triangulation whose degrees are all odd.
std::optional<PlaneGraph> all_odd_sample(int n, Seed seed, int budget);

/// Connected plane graph obtained from a random triangulation by removing
/// `removals` random edges (keeping connectivity).
PlaneGraph random_connected_plane(int n, Seed seed, int removals);

}  // namespace domtri
