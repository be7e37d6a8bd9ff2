#pragma once

// Brute-force reference computations that do not use the polytope engine.

#include <cstddef>
#include <vector>

#include "par4/graphs.hpp"

namespace par4::oracle {

inline int edge_subset_rank(const Graph& g, unsigned mask) {
  std::vector<Graph::Edge> es;
  for (std::size_t k = 0; k < g.n_edges(); ++k)
    if (mask >> k & 1) es.push_back(g.edges()[k]);
  return Graph(g.n_vertices(), es).rank();
}

// Edge subsets of rank r that are closed (a facet pair of Z(G) per flat of rank 3).
inline std::size_t count_flats(const Graph& g, int r) {
  const std::size_t m = g.n_edges();
  std::size_t flats = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int rk = edge_subset_rank(g, mask);
    if (rk != r) continue;
    bool closed = true;
    for (std::size_t k = 0; k < m && closed; ++k)
      if (!(mask >> k & 1) && edge_subset_rank(g, mask | (1u << k)) == rk) closed = false;
    flats += closed ? 1 : 0;
  }
  return flats;
}

// Orientations without a directed cycle (the vertices of Z(G)).
inline std::size_t count_acyclic_orientations(const Graph& g) {
  const std::size_t m = g.n_edges();
  const auto n = static_cast<std::size_t>(g.n_vertices());
  std::size_t count = 0;
  for (unsigned dir = 0; dir < (1u << m); ++dir) {
    std::vector<std::vector<std::size_t>> out(n + 1);
    std::vector<int> indeg(n + 1, 0);
    for (std::size_t k = 0; k < m; ++k) {
      auto [a, b] = g.edges()[k];
      if (dir >> k & 1) std::swap(a, b);
      out[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
      ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 1; v <= n; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::size_t v = ready.back();
      ready.pop_back();
      ++seen;
      for (auto w : out[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    count += seen == n ? 1 : 0;
  }
  return count;
}

}  // namespace par4::oracle
