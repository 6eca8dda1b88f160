#pragma once

// Subset-enumeration oracles kept deliberately naive: they share no code
// with the library searches they cross-check.

#include <bit>
#include <cstdint>
#include <vector>

#include "domtri/plane_graph.h"

namespace domtri::testing {

inline std::vector<std::uint32_t> closed_masks(const PlaneGraph& g) {
  std::vector<std::uint32_t> m(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    m[v] = 1u << v;
    for (VertexId w : g.rotation(v)) m[v] |= 1u << w;
  }
  return m;
}

struct BruteDomination {
  int gamma = 0;
  int iota = 0;
};

// Requires n <= 20.
inline BruteDomination brute_domination(const PlaneGraph& g) {
  const int n = g.vertex_count();
  const auto closed = closed_masks(g);
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  BruteDomination r{n + 1, n + 1};
  for (std::uint32_t s = 0; s <= all; ++s) {
    std::uint32_t dom = 0;
    bool indep = true;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) {
        dom |= closed[v];
        if ((closed[v] & ~(1u << v)) & s) indep = false;
      }
    if (dom != all) continue;
    const int k = std::popcount(s);
    if (k < r.gamma) r.gamma = k;
    if (indep && k < r.iota) r.iota = k;
    if (s == all) break;
  }
  return r;
}

}  // namespace domtri::testing
