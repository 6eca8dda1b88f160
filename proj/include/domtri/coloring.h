#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "domtri/generators.h"
#include "domtri/plane_graph.h"

namespace domtri {

/// Assignment of vertices to k indexed classes (0-based). Classes may be
/// empty. Vertices may be left uncolored while a coloring is under
/// construction; the checkers reject such partial colorings.
class Coloring {
 public:
  static constexpr int kUncolored = -1;

  Coloring() = default;
  /// Throws domtri::Error if an entry is outside [-1, k).
  Coloring(int k, std::vector<int> assignment);

  int class_count() const noexcept { return k_; }
  int vertex_count() const noexcept { return static_cast<int>(assignment_.size()); }
  int operator[](VertexId v) const { return assignment_.at(v); }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  bool is_total() const;

  std::vector<VertexSet> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_ = 0;
  std::vector<int> assignment_;
};

std::vector<int> class_sizes(const Coloring& c);

/// True iff no edge is monochromatic. Throws if c is partial or sized for
/// a different graph.
bool is_proper(const PlaneGraph& g, const Coloring& c);

/// Every vertex sees at least min(r, d(v)) classes among its neighbours.
bool is_r_dynamic(const PlaneGraph& g, const Coloring& c, int r);

/// Every pair of classes induces a forest.
bool is_acyclic(const PlaneGraph& g, const Coloring& c);

/// L(v): classes absent from the closed neighbourhood of v.
struct MissingColors {
  VertexId vertex = -1;
  std::vector<int> classes;
};

MissingColors missing_colors(const PlaneGraph& g, const Coloring& c, VertexId v);

/// Relabels class i as perm[i]. Throws unless perm is a bijection on 0..k-1.
Coloring permute_classes(const Coloring& c, const std::vector<int>& perm);

/// Proper coloring with k = 4 by saturation-ordered backtracking (most
/// constrained vertex first, lowest class first). Deterministic in g.
/// Throws domtri::Error if the search is exhausted.
Coloring four_coloring(const PlaneGraph& g);

/// For a planar 3-tree: base triangle gets 0, 1, 2 and each stacked vertex
/// the one class its host face lacks. Every class is dominating.
Coloring stacked_four_coloring(const PlaneGraph& g, const BuildTrace& trace);

/// Inductive 5-dynamic 6-coloring of a recursive Eulerian triangulation in
/// which adjacent degree-4 vertices miss different classes.
///
/// The base triangle takes classes 0, 1, 2. Each insertion of a triangle
/// (a, b, c) into face (x, y, z), a opposite x and so on, first relabels
/// classes by the lexicographically smallest permutation placing x, y, z in
/// 0, 1, 2 with L(x) in {3}, L(y) in {4}, L(z) in {5}, then colors a, b, c
/// with 4, 5, 3. The first insertion yields the rainbow octahedron and
/// skips the L constraints. Throws InvariantBreach if no permutation exists.
Coloring rec_eulerian_six_coloring(const PlaneGraph& g, const BuildTrace& trace);

/// "vertex class" lines preceded by a "# k <k>" comment.
std::string coloring_to_text(const Coloring& c);
/// Accepts the format above; without a "# k" line, k = 1 + max class.
Coloring parse_coloring(std::string_view text, int vertex_count);
Coloring read_coloring_file(const std::filesystem::path& path, int vertex_count);

}  // namespace domtri
