#include "par4/canonical_form.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace par4 {

void ColoredGraph::add_edge(std::size_t a, std::size_t b) {
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

namespace {

using Coloring = std::vector<int>;

int count_colors(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Dense colors 0..k-1 in order of the given keys.
template <typename Key>
Coloring rank_by(const std::vector<Key>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Coloring out(keys.size());
  int next = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++next;
    out[order[i]] = next;
  }
  return out;
}

Coloring refine(const ColoredGraph& g, Coloring c) {
  int k = count_colors(c);
  std::vector<std::vector<int>> sig(g.size());
  for (;;) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(c[v]);
      for (auto u : g.adjacency[v]) s.push_back(c[u]);
      std::sort(s.begin() + 1, s.end());
    }
    Coloring next = rank_by(sig);
    int nk = count_colors(next);
    c = std::move(next);
    if (nk == k) return c;
    k = nk;
  }
}

std::vector<std::uint32_t> leaf_code(const ColoredGraph& g, const Coloring& c) {
  const std::size_t n = g.size();
  std::vector<std::size_t> node_at(n);
  for (std::size_t v = 0; v < n; ++v) node_at[static_cast<std::size_t>(c[v])] = v;
  std::vector<std::uint32_t> code;
  code.push_back(static_cast<std::uint32_t>(n));
  for (std::size_t pos = 0; pos < n; ++pos) code.push_back(static_cast<std::uint32_t>(g.colors[node_at[pos]]));
  std::vector<std::uint32_t> nb;
  for (std::size_t pos = 0; pos < n; ++pos) {
    nb.clear();
    for (auto u : g.adjacency[node_at[pos]]) nb.push_back(static_cast<std::uint32_t>(c[u]));
    std::sort(nb.begin(), nb.end());
    code.push_back(static_cast<std::uint32_t>(nb.size()));
    code.insert(code.end(), nb.begin(), nb.end());
  }
  return code;
}

struct Search {
  const ColoredGraph& g;
  std::optional<std::vector<std::uint32_t>> best_code;
  Coloring best_coloring;

  void run(const Coloring& c) {
    const std::size_t n = g.size();
    const int k = count_colors(c);
    if (static_cast<std::size_t>(k) == n) {
      auto code = leaf_code(g, c);
      if (!best_code || code < *best_code) {
        best_code = std::move(code);
        best_coloring = c;
      }
      return;
    }
    // first non-singleton cell
    std::vector<int> cell_size(static_cast<std::size_t>(k), 0);
    for (int x : c) ++cell_size[static_cast<std::size_t>(x)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (c[v] != target) continue;
      Coloring child(c);
      for (std::size_t u = 0; u < n; ++u) {
        if (c[u] > target || (c[u] == target && u != v)) child[u] = c[u] + 1;
      }
      run(refine(g, std::move(child)));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
  CanonicalForm out;
  if (g.size() == 0) {
    out.code = {0};
    return out;
  }
  Search search{g, std::nullopt, {}};
  search.run(refine(g, rank_by(g.colors)));
  out.code = std::move(*search.best_code);
  out.label.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out.label[v] = static_cast<std::size_t>(search.best_coloring[v]);
  return out;
}

}  // namespace par4
