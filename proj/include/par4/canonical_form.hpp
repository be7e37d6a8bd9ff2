#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace par4 {

// Undirected vertex-colored graph. Colors are isomorphism-invariant labels
// supplied by the caller (e.g. 0 = polytope vertex, 1 = facet).
struct ColoredGraph {
  std::vector<int> colors;
  std::vector<std::vector<std::size_t>> adjacency;

  explicit ColoredGraph(std::size_t n = 0) : colors(n, 0), adjacency(n) {}
  [[nodiscard]] std::size_t size() const { return colors.size(); }
  void add_edge(std::size_t a, std::size_t b);
};

// Canonical relabeling of a colored graph: label[v] is the position of v in
// canonical order. Two graphs are isomorphic (color-preserving) iff their
// `code` vectors compare equal.
struct CanonicalForm {
  std::vector<std::size_t> label;
  std::vector<std::uint32_t> code;
};

// Color refinement on (color, neighbor-color multiset) with individualization
// of every member of the first non-singleton cell; the canonical leaf is the
// one with the lexicographically least code.
CanonicalForm canonical_form(const ColoredGraph& g);

}  // namespace par4
