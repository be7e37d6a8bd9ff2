#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "par4/graphs.hpp"
#include "par4/roots.hpp"
#include "oracles.hpp"

using namespace par4;

namespace {

Matrix random_unimodular(std::mt19937& rng) {
  Matrix m = Matrix::identity(4);
  std::uniform_int_distribution<int> pick(0, 3), coef(-2, 2);
  for (int step = 0; step < 12; ++step) {
    const auto i = static_cast<std::size_t>(pick(rng));
    const auto j = static_cast<std::size_t>(pick(rng));
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t k = 0; k < 4; ++k) m(i, k) += Rational(c) * m(j, k);
  }
  return m;
}

}  // namespace

TEST_CASE("graphic vectors of K5 are the ten vectors of A4") {
  const auto s = graphic_vectors(reference_graph(ConwayLabel::K5));
  CHECK(s.size() == 10);
  CHECK(s.rank == 4);
  std::set<Vector> vs(s.vectors.begin(), s.vectors.end());
  for (std::size_t i = 0; i < 4; ++i) CHECK(vs.count(Vector::unit(4, i)) == 1);
  CHECK(vs.count(Vector{1, 0, -1, 0}) == 1);
}

TEST_CASE("cycle condition around a triangle") {
  const Graph g(5, {{1, 2}, {2, 5}, {1, 5}});
  const auto v = graphic_vectors(g).vectors;
  // (1,2) + (2,5) - (1,5) = 0
  CHECK((v[0] + v[1] - v[2]).is_zero());
}

TEST_CASE("loops are rejected and a forest is a basis") {
  CHECK_THROWS_AS(Graph(5, {{2, 2}}), std::invalid_argument);
  const auto s = graphic_vectors(reference_graph(ConwayLabel::Forest4));
  CHECK(s.size() == 4);
  CHECK(rank(s.vectors) == 4);
}

TEST_CASE("is_unimodular examples") {
  CHECK(is_unimodular(std::vector<Vector>{}));
  const std::vector<Vector> bad{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}};
  CHECK_FALSE(is_unimodular(bad));
  const RootMask quad = quadruples()[0].mask();
  CHECK(is_unimodular(root_vectors(quad)));
  for (const auto& r : positive_roots(4)) {
    const RootMask bit = static_cast<RootMask>(1u << r.index());
    if (quad & bit) continue;
    CHECK_FALSE(is_unimodular(root_vectors(static_cast<RootMask>(quad | bit))));
    // the uniform matroid U(4,5): rescaling makes it unimodular
    CHECK(spans_unimodular(root_vectors(static_cast<RootMask>(quad | bit))));
  }
}

TEST_CASE("is_unimodular is invariant under reorder, sign flips and unimodular maps") {
  std::mt19937 rng(3);
  for (const auto& lg : enumerate_rank4_subgraphs_k5()) {
    auto vs = graphic_vectors(lg.graph).vectors;
    CHECK(is_unimodular(vs));
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(vs.begin(), vs.end(), rng);
      const Matrix m = random_unimodular(rng);
      std::vector<Vector> mapped;
      for (auto& v : vs) mapped.push_back((rng() & 1) ? m * v : -(m * v));
      CHECK(is_unimodular(mapped));
      CHECK(matroid_certificate(mapped) == matroid_certificate(vs));
    }
  }
  std::vector<Vector> bad{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}};
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(bad.begin(), bad.end(), rng);
    CHECK_FALSE(is_unimodular(bad));
  }
}

TEST_CASE("16 rank-4 subgraph classes of K5 with the Table 1 edge counts") {
  const auto classes = enumerate_rank4_subgraphs_k5();
  REQUIRE(classes.size() == 16);
  std::map<ConwayLabel, std::size_t> m;
  for (const auto& c : classes) {
    m[c.label] = c.graph.n_edges();
    CHECK(c.graph.rank() == 4);
    CHECK(conway_label(c.graph) == c.label);
  }
  CHECK(m[ConwayLabel::K5] == 10);
  CHECK(m[ConwayLabel::K5_minus_1] == 9);
  CHECK(m[ConwayLabel::K5_minus_2x1] == 8);
  CHECK(m[ConwayLabel::K5_minus_2] == 8);
  CHECK(m[ConwayLabel::C221_plus_1] == 6);
  CHECK(m[ConwayLabel::C3_plus_C3] == 6);
  CHECK(m[ConwayLabel::C5] == 5);
  CHECK(m[ConwayLabel::Forest4] == 4);
  CHECK(m.count(ConwayLabel::K33_dual) == 0);
}

TEST_CASE("K33* is unimodular and not graphic") {
  const auto k = cographic_k33_vectors();
  CHECK(k.size() == 9);
  CHECK(k.rank == 4);
  CHECK(is_unimodular(k));
  CHECK(matroid_label(k.vectors) == ConwayLabel::K33_dual);
  const std::string cert = matroid_certificate(k.vectors);
  for (const auto& lg : enumerate_rank4_subgraphs_k5())
    CHECK(matroid_certificate(graphic_vectors(lg.graph).vectors) != cert);
  // dropping 24+ leaves K5 - 2x1
  std::vector<Vector> rest;
  for (const auto& v : k.vectors)
    if (v != Root::parse("24+").vector()) rest.push_back(v);
  REQUIRE(rest.size() == 8);
  CHECK(matroid_label(rest) == ConwayLabel::K5_minus_2x1);
}

TEST_CASE("matroid circuits of a triangle plus a pendant edge") {
  const Graph g(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  const auto circuits = matroid_circuits(cycle_matroid_vectors(g));
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("graph isomorphism ignores vertex names") {
  const Graph a(5, {{1, 2}, {2, 3}, {3, 1}, {4, 5}});
  const Graph b(5, {{5, 4}, {4, 3}, {3, 5}, {1, 2}});
  const Graph c(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(graph_isomorphic(a, b));
  CHECK_FALSE(graph_isomorphic(a, c));
}

TEST_CASE("labels round trip through their names") {
  for (auto l : all_labels()) CHECK(parse_label(label_name(l)) == l);
  CHECK_THROWS_AS(parse_label("K6"), std::invalid_argument);
}

TEST_CASE("hyperplane counts of the graphic classes match a brute-force flat count") {
  // rank-3 flats of K5: 5 + 10 = 15 (a vertex split off, or a triangle and an edge)
  CHECK(oracle::count_flats(reference_graph(ConwayLabel::K5), 3) == 15);
  CHECK(oracle::count_flats(reference_graph(ConwayLabel::Forest4), 3) == 4);
}
