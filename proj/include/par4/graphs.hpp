#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "par4/linalg.hpp"

namespace par4 {

// Multigraph on vertices 1..n. Loops are rejected; parallel edges are kept.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  Graph(int n_vertices, std::vector<Edge> edges);

  [[nodiscard]] int n_vertices() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t n_edges() const { return edges_.size(); }
  [[nodiscard]] int n_components() const;
  // n_vertices - n_components (isolated vertices count as components).
  [[nodiscard]] int rank() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // normalized so that first < second
};

// Matroid class names used for the zonotope generators (Conway's graph
// notation, k x 1 for a forest of k edges). Cell24 labels the empty system
// summed with the 24-cell.
enum class ConwayLabel {
  K5,
  K5_minus_1,
  K5_minus_2x1,
  K5_minus_2,
  K5_minus_1_minus_2,
  K5_minus_3,
  K4_plus_1,
  C2221,
  C222,
  C321,
  C221_plus_1,
  C3_plus_C3,
  C4_plus_1,
  C5,
  C3_plus_2x1,
  Forest4,
  K33_dual,
  K4,
  C221,
  C3_plus_1,
  C4,
  Forest3,
  C3,
  Forest2,
  Forest1,
  Cell24,
};

// Canonical ASCII spelling: "K5-2x1", "C221+1", "K33*", "4x1", "24-cell", ...
std::string label_name(ConwayLabel label);
ConwayLabel parse_label(std::string_view name);
std::span<const ConwayLabel> all_labels();

enum class SystemSource { Graphic, CographicK33, RootSubset, Explicit };

// Finite set of pairwise non-parallel integer vectors spanning a matroid.
struct UniSystem {
  std::vector<Vector> vectors;
  SystemSource source = SystemSource::Explicit;
  std::optional<Graph> graph;
  std::size_t rank = 0;

  // Throws std::invalid_argument on parallel or zero vectors or mixed dims.
  static UniSystem make(std::vector<Vector> vectors, SystemSource source = SystemSource::Explicit,
                        std::optional<Graph> graph = std::nullopt);
  [[nodiscard]] std::size_t size() const { return vectors.size(); }
};

// Edge (i,5) -> e_i, edge (i,j) with i<j<=4 -> e_i - e_j, in R^4.
UniSystem graphic_vectors(const Graph& g);

// Same rule for any graph: vertex n is the ground, dimension max(n-1, 1).
// Parallel edges give repeated vectors, so this returns plain vectors.
std::vector<Vector> cycle_matroid_vectors(const Graph& g);

// The nine D4 roots of the cographic K_{3,3} system in the root frame.
UniSystem cographic_k33_vectors();

// Every vector has integer coordinates in the first lexicographic basis and
// every maximal minor of that coordinate matrix lies in {-1, 0, 1}.
bool is_unimodular(std::span<const Vector> vectors);
inline bool is_unimodular(const UniSystem& s) { return is_unimodular(s.vectors); }

// Some rescaling of the individual vectors is unimodular (the zonotope
// condition, where segment lengths are free). Quadruple + one root of D4 is
// not unimodular but spans a unimodular system.
bool spans_unimodular(std::span<const Vector> vectors);

// Minimal dependent subsets, as sorted index lists, in lexicographic order.
std::vector<std::vector<std::size_t>> matroid_circuits(std::span<const Vector> vectors);

// Canonical form of the element/circuit incidence structure; equal strings
// mean isomorphic matroids.
std::string matroid_certificate(std::span<const Vector> vectors);

// Matroid class of a vector system, if it is one of the labeled classes.
std::optional<ConwayLabel> matroid_label(std::span<const Vector> vectors);

bool graph_isomorphic(const Graph& a, const Graph& b);

// Label of the cycle matroid of g. Throws std::invalid_argument when g is not
// in any labeled class.
ConwayLabel conway_label(const Graph& g);

struct LabeledGraph {
  Graph graph;
  ConwayLabel label;
};

// The 16 matroid classes of rank-4 subgraphs of K5, each represented by its
// lowest edge subset in lexicographic edge order; sorted by descending edge
// count then label.
std::vector<LabeledGraph> enumerate_rank4_subgraphs_k5();

// A fixed representative graph for each graphic label (not K33_dual/Cell24).
Graph reference_graph(ConwayLabel label);

}  // namespace par4
