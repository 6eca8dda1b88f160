#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "domtri/vertex_set.h"

namespace domtri {

/// A face as traced by the face walk. The boundary is listed with the face
/// on the left of every step; the degree counts boundary vertices with
/// their multiplicity on the walk (so a bridge contributes twice).
struct Face {
  FaceId id = -1;
  std::vector<VertexId> boundary;
  int degree = 0;
};

/// Combinatorial plane graph given by a rotation system.
///
/// `rotation(v)` lists the neighbours of `v` in counter-clockwise order. The
/// face to the left of the dart u->v continues with v->w where w precedes u
/// in the rotation of v. Bounded faces are therefore traced
/// counter-clockwise, and the unbounded face clockwise.
///
/// Values are immutable once built; every constructor validates symmetry,
/// simplicity and genus zero (Euler's formula per connected component).
/// Each rotation is stored starting at its smallest neighbour.
class PlaneGraph {
 public:
  /// Builds and validates. `outer_walk` must equal a cyclic rotation of
  /// some face walk; when absent the unique face of maximum degree is used,
  /// falling back to face 0 if that is ambiguous.
  static PlaneGraph from_rotations(std::vector<std::vector<VertexId>> rotations,
                                   std::optional<std::vector<VertexId>> outer_walk = {});

  /// Same, with the outer face named by a dart lying on it.
  static PlaneGraph from_rotations_with_outer_dart(std::vector<std::vector<VertexId>> rotations,
                                                   VertexId from, VertexId to);

  /// Copy with a different outer face.
  PlaneGraph with_outer_face(FaceId f) const;

  /// Derives the rotation system of a triangulated (or polygonal) surface
  /// from its oriented face walks. Throws if the walks are inconsistent.
  static std::vector<std::vector<VertexId>> rotations_from_faces(
      int vertex_count, std::span<const std::vector<VertexId>> faces);

  int vertex_count() const noexcept { return static_cast<int>(rotations_.size()); }
  int edge_count() const noexcept { return edge_count_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  std::span<const VertexId> rotation(VertexId v) const;
  const std::vector<std::vector<VertexId>>& rotations() const noexcept { return rotations_; }
  int degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(FaceId f) const { return faces_.at(f); }
  FaceId outer_face_id() const noexcept { return outer_; }
  const Face& outer_face() const { return faces_[outer_]; }

  /// Face to the left of the dart from->to. Throws if uv is not an edge.
  FaceId face_of_dart(VertexId from, VertexId to) const;
  /// Face incident to an isolated vertex.
  FaceId face_of_isolated(VertexId v) const;

  /// Position of `neighbor` in rotation(v), or -1.
  int rotation_index(VertexId v, VertexId neighbor) const;

  bool is_connected() const noexcept { return component_count_ == 1; }
  int component_count() const noexcept { return component_count_; }

  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.rotations_ == b.rotations_ && a.faces_[a.outer_].boundary == b.faces_[b.outer_].boundary;
  }

 private:
  PlaneGraph() = default;
  void build();
  void check_vertex(VertexId v) const;
  int dart_index(VertexId from, VertexId to) const;

  std::vector<std::vector<VertexId>> rotations_;
  std::vector<int> dart_offset_;
  std::vector<FaceId> dart_face_;
  std::vector<FaceId> isolated_face_;
  std::vector<Face> faces_;
  FaceId outer_ = 0;
  int edge_count_ = 0;
  int component_count_ = 0;
};

/// Rotates a cyclic walk so its lexicographically smallest rotation comes first.
std::vector<VertexId> canonical_walk(std::span<const VertexId> walk);

// --- classification -------------------------------------------------------

enum class GraphKind { PlanarTriangulation, NearTriangulation, ConnectedPlane, Invalid };

std::string_view to_string(GraphKind kind);

struct GraphClass {
  GraphKind kind = GraphKind::Invalid;
  int min_degree = 0;
  bool is_two_connected = false;
  bool all_degrees_even = false;
  bool all_degrees_odd = false;

  bool is_near_triangulation() const noexcept {
    return kind == GraphKind::PlanarTriangulation || kind == GraphKind::NearTriangulation;
  }
};

GraphClass classify(const PlaneGraph& g);

bool is_two_connected(const PlaneGraph& g);

/// Histogram degree -> number of faces.
std::map<int, int> face_degree_histogram(const PlaneGraph& g);

// --- neighbourhoods ---------------------------------------------------------

VertexSet neighbors(const PlaneGraph& g, VertexId v);
int degree(const PlaneGraph& g, VertexId v);
VertexSet closed_neighborhood(const PlaneGraph& g, const VertexSet& s);
/// N(S): every neighbour of a member of S (members included when adjacent).
VertexSet open_neighborhood(const PlaneGraph& g, const VertexSet& s);

// --- vertex deletion --------------------------------------------------------

struct DeletionResult {
  PlaneGraph graph;
  std::vector<VertexId> new_to_old;
  std::vector<VertexId> old_to_new;  ///< -1 for deleted vertices
  bool connected = false;
  /// For each deleted vertex (in ascending id order) the face of the result
  /// that contains it, or -1 when none of its neighbours survives.
  std::vector<std::pair<VertexId, FaceId>> containing_face;
};

/// Induced embedding of g - s. Face ids are not preserved. The outer face of
/// the result is the face containing the unbounded region of g. Throws if
/// s covers every vertex.
DeletionResult delete_vertices(const PlaneGraph& g, const VertexSet& s);

/// g minus the edge uv; the outer face follows the old outer face.
PlaneGraph delete_edge(const PlaneGraph& g, VertexId u, VertexId v);

/// Replaces the inner edge uv of a triangulation by the opposite diagonal.
/// Throws domtri::Error when uv lies on the outer face, when either side is
/// not a triangle, or when the new diagonal already exists.
PlaneGraph flip_edge(const PlaneGraph& g, VertexId u, VertexId v);

/// True when flip_edge(g, u, v) would succeed.
bool is_flippable(const PlaneGraph& g, VertexId u, VertexId v);

// --- structural predicates ---------------------------------------------------

enum class NeighborhoodShape { SpanningCycle, SpanningPath };

struct NeighborhoodStructure {
  NeighborhoodShape shape;
  std::vector<VertexId> order;  ///< Hamiltonian cycle or path of G[N(v)]
};

/// Exhaustive Hamiltonicity on G[N(v)]. Requires a near triangulation on at
/// least four vertices. Throws InvariantBreach if neither structure exists,
/// or if a path appears where the outer boundary rules it out.
NeighborhoodStructure neighborhood_structure(const PlaneGraph& g, VertexId v);

struct FacesInequality {
  long long lhs = 0;               ///< f_4 + 2 * sum_{i>=6} f_i
  long long rhs = 0;               ///< |V| - 2
  double strengthened_rhs = 0.0;   ///< |V| - 2 - (f_3 + 3 f_5) / 2
  bool holds = false;              ///< lhs <= rhs
  bool strengthened_holds = false; ///< lhs <= strengthened_rhs
};

/// Components of the subgraph induced by the degree-4 vertices V_4, and how
/// they sit in the faces of G - V_4.
struct Degree4Structure {
  std::vector<VertexSet> components;
  bool all_triangles = false;       ///< every component induces a triangle
  bool all_small_cliques = false;   ///< every component is K1, K2 or K3
  int max_per_face = 0;             ///< most V_4 vertices inside one face of G - V_4
};

Degree4Structure degree4_structure(const PlaneGraph& g);

/// Face counts use walk lengths. Throws domtri::Error unless h is connected.
FacesInequality check_faces_inequality(const PlaneGraph& h);

}  // namespace domtri
