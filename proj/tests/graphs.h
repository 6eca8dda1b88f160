#pragma once

// Small hand-built embeddings shared by the unit tests.

#include <vector>

#include "domtri/plane_graph.h"

namespace domtri::testing {

inline PlaneGraph cycle(int n) {
  std::vector<std::vector<VertexId>> rot(n);
  for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
  return PlaneGraph::from_rotations(rot);
}

inline PlaneGraph path(int n) {
  std::vector<std::vector<VertexId>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (v > 0) rot[v].push_back(v - 1);
    if (v + 1 < n) rot[v].push_back(v + 1);
  }
  return PlaneGraph::from_rotations(rot);
}

// Hexagon 0..5 triangulated by the fan from 0; outer face is the hexagon.
inline PlaneGraph hexagon_fan() {
  const std::vector<std::vector<VertexId>> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 4, 3, 2, 1}};
  return PlaneGraph::from_rotations(PlaneGraph::rotations_from_faces(6, faces), faces.back());
}

}  // namespace domtri::testing
