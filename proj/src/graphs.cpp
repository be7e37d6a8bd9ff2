#include "par4/graphs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "par4/canonical_form.hpp"

namespace par4 {

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("Graph: need at least one vertex");
  for (auto& [a, b] : edges_) {
    if (a < 1 || b < 1 || a > n_ || b > n_) throw std::invalid_argument("Graph: endpoint out of range");
    if (a == b) throw std::invalid_argument("Graph: loops are not allowed");
    if (a > b) std::swap(a, b);
  }
}

int Graph::n_components() const {
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int comps = n_;
  for (auto [a, b] : edges_) {
    int ra = find(a);
    int rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --comps;
    }
  }
  return comps;
}

int Graph::rank() const { return n_ - n_components(); }

namespace {

struct LabelInfo {
  ConwayLabel label;
  const char* name;
};

constexpr std::array<LabelInfo, 26> kLabels{{
    {ConwayLabel::K5, "K5"},
    {ConwayLabel::K5_minus_1, "K5-1"},
    {ConwayLabel::K5_minus_2x1, "K5-2x1"},
    {ConwayLabel::K5_minus_2, "K5-2"},
    {ConwayLabel::K5_minus_1_minus_2, "K5-1-2"},
    {ConwayLabel::K5_minus_3, "K5-3"},
    {ConwayLabel::K4_plus_1, "K4+1"},
    {ConwayLabel::C2221, "C2221"},
    {ConwayLabel::C222, "C222"},
    {ConwayLabel::C321, "C321"},
    {ConwayLabel::C221_plus_1, "C221+1"},
    {ConwayLabel::C3_plus_C3, "C3+C3"},
    {ConwayLabel::C4_plus_1, "C4+1"},
    {ConwayLabel::C5, "C5"},
    {ConwayLabel::C3_plus_2x1, "C3+2x1"},
    {ConwayLabel::Forest4, "4x1"},
    {ConwayLabel::K33_dual, "K33*"},
    {ConwayLabel::K4, "K4"},
    {ConwayLabel::C221, "C221"},
    {ConwayLabel::C3_plus_1, "C3+1"},
    {ConwayLabel::C4, "C4"},
    {ConwayLabel::Forest3, "3x1"},
    {ConwayLabel::C3, "C3"},
    {ConwayLabel::Forest2, "2x1"},
    {ConwayLabel::Forest1, "1"},
    {ConwayLabel::Cell24, "24-cell"},
}};

constexpr std::array<ConwayLabel, 26> kLabelOrder = [] {
  std::array<ConwayLabel, 26> out{};
  for (std::size_t i = 0; i < kLabels.size(); ++i) out[i] = kLabels[i].label;
  return out;
}();

Vector root_vector(int i, int j, int sign) {
  Vector v(4);
  v[static_cast<std::size_t>(i - 1)] = 1;
  v[static_cast<std::size_t>(j - 1)] = sign;
  return v;
}

}  // namespace

std::string label_name(ConwayLabel label) {
  for (const auto& info : kLabels)
    if (info.label == label) return info.name;
  throw std::logic_error("label_name: unknown label");
}

ConwayLabel parse_label(std::string_view name) {
  for (const auto& info : kLabels)
    if (name == info.name) return info.label;
  throw std::invalid_argument("parse_label: unknown label '" + std::string(name) + "'");
}

std::span<const ConwayLabel> all_labels() { return kLabelOrder; }

UniSystem UniSystem::make(std::vector<Vector> vectors, SystemSource source, std::optional<Graph> graph) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].is_zero()) throw std::invalid_argument("UniSystem: zero vector");
    if (vectors[i].dim() != vectors.front().dim()) throw std::invalid_argument("UniSystem: mixed dimensions");
    for (std::size_t j = 0; j < i; ++j) {
      if (parallel(vectors[i], vectors[j])) throw std::invalid_argument("UniSystem: parallel vectors");
    }
  }
  UniSystem s;
  s.rank = par4::rank(std::span<const Vector>(vectors));
  s.vectors = std::move(vectors);
  s.source = source;
  s.graph = std::move(graph);
  return s;
}

std::vector<Vector> cycle_matroid_vectors(const Graph& g) {
  const int n = g.n_vertices();
  const std::size_t dim = static_cast<std::size_t>(std::max(n - 1, 1));
  std::vector<Vector> out;
  out.reserve(g.n_edges());
  for (auto [a, b] : g.edges()) {
    Vector v(dim);
    if (b == n) {
      v[static_cast<std::size_t>(a - 1)] = 1;
    } else {
      v[static_cast<std::size_t>(a - 1)] = 1;
      v[static_cast<std::size_t>(b - 1)] = -1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

UniSystem graphic_vectors(const Graph& g) {
  if (g.n_vertices() > 5) throw std::invalid_argument("graphic_vectors: graph must be a subgraph of K5");
  std::vector<Vector> out;
  for (auto [a, b] : g.edges()) {
    Vector v(4);
    v[static_cast<std::size_t>(a - 1)] = 1;
    if (b != 5) v[static_cast<std::size_t>(b - 1)] = -1;
    out.push_back(std::move(v));
  }
  return UniSystem::make(std::move(out), SystemSource::Graphic, g);
}

UniSystem cographic_k33_vectors() {
  std::vector<Vector> v{
      root_vector(1, 2, -1), root_vector(1, 2, 1), root_vector(3, 4, -1),
      root_vector(1, 3, -1), root_vector(1, 3, 1), root_vector(2, 4, 1),
      root_vector(1, 4, -1), root_vector(1, 4, 1), root_vector(2, 3, -1),
  };
  return UniSystem::make(std::move(v), SystemSource::CographicK33);
}

bool is_unimodular(std::span<const Vector> vectors) {
  if (vectors.empty()) return true;
  auto basis = first_basis(vectors);
  const std::size_t r = basis.size();
  const std::size_t d = vectors.front().dim();
  Matrix cols(d, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < d; ++i) cols(i, k) = vectors[basis[k]][i];

  std::vector<Vector> coords;
  coords.reserve(vectors.size());
  for (const auto& u : vectors) {
    auto x = solve_linear(cols, u);
    if (!x) throw std::logic_error("is_unimodular: vector outside the span of its basis");
    if (!x->is_integral()) return false;
    coords.push_back(std::move(*x));
  }

  // all r x r minors of the m x r coordinate matrix must be 0 or +-1
  const std::size_t m = coords.size();
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    Matrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = coords[pick[i]][j];
    if (abs(determinant(sub)) > Rational(1)) return false;
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

bool spans_unimodular(std::span<const Vector> vectors) {
  if (vectors.empty()) return true;
  auto basis = first_basis(vectors);
  const std::size_t r = basis.size();
  const std::size_t d = vectors.front().dim();
  const std::size_t m = vectors.size();
  Matrix cols(d, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < d; ++i) cols(i, k) = vectors[basis[k]][i];
  std::vector<Vector> coords;
  for (const auto& u : vectors) {
    auto x = solve_linear(cols, u);
    if (!x) throw std::logic_error("spans_unimodular: vector outside the span of its basis");
    coords.push_back(std::move(*x));
  }

  // Scale rows and columns so that the entries on a spanning forest of the
  // row/column support graph have absolute value 1. Any scaling that makes
  // the system unimodular agrees with this one up to signs.
  std::vector<std::optional<Rational>> row(r);
  std::vector<std::optional<Rational>> col(m);
  for (std::size_t start = 0; start < r; ++start) {
    if (row[start]) continue;
    row[start] = Rational(1);
    std::vector<std::size_t> queue{start};  // rows < r, columns as r + j
    while (!queue.empty()) {
      const std::size_t node = queue.back();
      queue.pop_back();
      if (node < r) {
        for (std::size_t j = 0; j < m; ++j) {
          if (col[j] || coords[j][node].is_zero()) continue;
          col[j] = Rational(1) / abs(coords[j][node] * *row[node]);
          queue.push_back(r + j);
        }
      } else {
        const std::size_t j = node - r;
        for (std::size_t i = 0; i < r; ++i) {
          if (row[i] || coords[j][i].is_zero()) continue;
          row[i] = Rational(1) / abs(coords[j][i] * *col[j]);
          queue.push_back(i);
        }
      }
    }
  }
  std::vector<Vector> scaled;
  for (std::size_t j = 0; j < m; ++j) scaled.push_back(vectors[j] * col[j].value_or(Rational(1)));
  return is_unimodular(scaled);
}

std::vector<std::vector<std::size_t>> matroid_circuits(std::span<const Vector> vectors) {
  const std::size_t m = vectors.size();
  if (m > 16) throw std::invalid_argument("matroid_circuits: at most 16 elements supported");
  const std::size_t total = std::size_t{1} << m;
  std::vector<int> rk(total, 0);
  std::vector<Vector> sel;
  for (std::size_t mask = 1; mask < total; ++mask) {
    sel.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) sel.push_back(vectors[i]);
    rk[mask] = static_cast<int>(rank(sel));
  }
  std::vector<std::vector<std::size_t>> circuits;
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (rk[mask] != size - 1) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < m && minimal; ++i) {
      if (mask >> i & 1) minimal = rk[mask & ~(std::size_t{1} << i)] == size - 1;
    }
    if (!minimal) continue;
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) c.push_back(i);
    circuits.push_back(std::move(c));
  }
  std::sort(circuits.begin(), circuits.end());
  return circuits;
}

namespace {

std::string encode_code(const CanonicalForm& form) {
  std::ostringstream os;
  for (std::size_t i = 0; i < form.code.size(); ++i) os << (i ? "." : "") << form.code[i];
  return os.str();
}

struct ReferenceTable {
  std::map<std::string, ConwayLabel> by_certificate;
};

std::vector<Vector> reference_vectors(ConwayLabel label) {
  if (label == ConwayLabel::K33_dual) return cographic_k33_vectors().vectors;
  return cycle_matroid_vectors(reference_graph(label));
}

const ReferenceTable& reference_table() {
  static const ReferenceTable table = [] {
    ReferenceTable t;
    for (auto label : all_labels()) {
      if (label == ConwayLabel::Cell24) continue;
      auto cert = matroid_certificate(reference_vectors(label));
      if (!t.by_certificate.emplace(cert, label).second) {
        throw std::logic_error("reference labels are not matroid-distinct");
      }
    }
    return t;
  }();
  return table;
}

CanonicalForm graph_form(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n_vertices());
  ColoredGraph cg(n + g.n_edges());
  for (std::size_t e = 0; e < g.n_edges(); ++e) {
    cg.colors[n + e] = 1;
    cg.add_edge(static_cast<std::size_t>(g.edges()[e].first - 1), n + e);
    cg.add_edge(static_cast<std::size_t>(g.edges()[e].second - 1), n + e);
  }
  return canonical_form(cg);
}

}  // namespace

std::string matroid_certificate(std::span<const Vector> vectors) {
  auto circuits = matroid_circuits(vectors);
  const std::size_t m = vectors.size();
  ColoredGraph cg(m + circuits.size());
  for (std::size_t c = 0; c < circuits.size(); ++c) {
    cg.colors[m + c] = 1;
    for (auto e : circuits[c]) cg.add_edge(e, m + c);
  }
  return "M" + std::to_string(m) + ":" + encode_code(canonical_form(cg));
}

std::optional<ConwayLabel> matroid_label(std::span<const Vector> vectors) {
  if (vectors.empty()) return std::nullopt;
  const auto& table = reference_table();
  auto it = table.by_certificate.find(matroid_certificate(vectors));
  if (it == table.by_certificate.end()) return std::nullopt;
  return it->second;
}

bool graph_isomorphic(const Graph& a, const Graph& b) {
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
  return graph_form(a).code == graph_form(b).code;
}

ConwayLabel conway_label(const Graph& g) {
  auto label = matroid_label(cycle_matroid_vectors(g));
  if (!label) throw std::invalid_argument("conway_label: graph is not in a labeled class");
  return *label;
}

Graph reference_graph(ConwayLabel label) {
  using E = std::vector<Graph::Edge>;
  const E k5{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  auto k5_minus = [&](const E& removed) {
    E out;
    for (auto e : k5)
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) out.push_back(e);
    return Graph(5, out);
  };
  switch (label) {
    case ConwayLabel::K5: return Graph(5, k5);
    case ConwayLabel::K5_minus_1: return k5_minus({{4, 5}});
    case ConwayLabel::K5_minus_2x1: return k5_minus({{1, 2}, {3, 4}});
    case ConwayLabel::K5_minus_2: return k5_minus({{1, 2}, {2, 3}});
    case ConwayLabel::K5_minus_1_minus_2: return k5_minus({{1, 2}, {2, 3}, {4, 5}});
    case ConwayLabel::K5_minus_3: return k5_minus({{1, 2}, {2, 3}, {3, 4}});
    case ConwayLabel::K4_plus_1: return Graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    case ConwayLabel::C2221: return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}});
    case ConwayLabel::C222: return Graph(5, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}});
    case ConwayLabel::C321: return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {2, 5}});
    case ConwayLabel::C221_plus_1: return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {4, 5}});
    case ConwayLabel::C3_plus_C3: return Graph(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
    case ConwayLabel::C4_plus_1: return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}});
    case ConwayLabel::C5: return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    case ConwayLabel::C3_plus_2x1: return Graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}});
    case ConwayLabel::Forest4: return Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    case ConwayLabel::K4: return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    case ConwayLabel::C221: return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    case ConwayLabel::C3_plus_1: return Graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    case ConwayLabel::C4: return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    case ConwayLabel::Forest3: return Graph(4, {{1, 2}, {2, 3}, {3, 4}});
    case ConwayLabel::C3: return Graph(3, {{1, 2}, {2, 3}, {1, 3}});
    case ConwayLabel::Forest2: return Graph(3, {{1, 2}, {2, 3}});
    case ConwayLabel::Forest1: return Graph(2, {{1, 2}});
    case ConwayLabel::K33_dual:
    case ConwayLabel::Cell24: break;
  }
  throw std::invalid_argument("reference_graph: label " + label_name(label) + " has no graph");
}

std::vector<LabeledGraph> enumerate_rank4_subgraphs_k5() {
  const std::vector<Graph::Edge> k5{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                    {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  std::map<std::vector<std::uint32_t>, Graph> graph_classes;  // keyed by canonical code
  std::vector<std::vector<std::uint32_t>> first_seen;
  for (unsigned mask = 0; mask < (1u << k5.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < k5.size(); ++i)
      if (mask >> i & 1) edges.push_back(k5[i]);
    Graph g(5, std::move(edges));
    if (g.rank() != 4) continue;
    auto code = graph_form(g).code;
    if (graph_classes.emplace(code, g).second) first_seen.push_back(code);
  }

  std::map<std::string, LabeledGraph> by_matroid;
  std::vector<std::string> order;
  for (const auto& code : first_seen) {
    const Graph& g = graph_classes.at(code);
    auto vectors = graphic_vectors(g).vectors;
    auto cert = matroid_certificate(vectors);
    if (by_matroid.count(cert)) continue;
    auto label = matroid_label(vectors);
    if (!label) throw std::logic_error("enumerate_rank4_subgraphs_k5: unlabeled class");
    by_matroid.emplace(cert, LabeledGraph{g, *label});
    order.push_back(cert);
  }
  std::vector<LabeledGraph> out;
  for (const auto& cert : order) out.push_back(by_matroid.at(cert));
  std::sort(out.begin(), out.end(), [](const LabeledGraph& a, const LabeledGraph& b) {
    if (a.graph.n_edges() != b.graph.n_edges()) return a.graph.n_edges() > b.graph.n_edges();
    return static_cast<int>(a.label) < static_cast<int>(b.label);
  });
  return out;
}

}  // namespace par4
