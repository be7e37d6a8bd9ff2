#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "par4/constructions.hpp"
#include "par4/graphs.hpp"
#include "par4/polytope.hpp"
#include "par4/roots.hpp"

using namespace par4;

namespace {

HPolytope cube_h(std::size_t d) {
  HPolytope h;
  h.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    h.facets.push_back({Vector::unit(d, i), 1});
    h.facets.push_back({-Vector::unit(d, i), 1});
  }
  return h;
}

Matrix random_unimodular(std::mt19937& rng) {
  Matrix m = Matrix::identity(4);
  std::uniform_int_distribution<int> pick(0, 3), coef(-2, 2);
  for (int step = 0; step < 10; ++step) {
    const auto i = static_cast<std::size_t>(pick(rng));
    const auto j = static_cast<std::size_t>(pick(rng));
    if (i != j) {
      const Rational c(coef(rng));
      for (std::size_t k = 0; k < 4; ++k) m(i, k) += c * m(j, k);
    }
  }
  return m;
}

std::vector<Vector> signed_sums(const std::vector<Vector>& gens) {
  std::vector<Vector> out;
  for (unsigned s = 0; s < (1u << gens.size()); ++s) {
    Vector v(gens.front().dim());
    for (std::size_t k = 0; k < gens.size(); ++k) v += (s >> k & 1) ? gens[k] : -gens[k];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("cubes") {
  const Polytope c3 = polytope_from_h(cube_h(3));
  CHECK(c3.f_vector() == std::vector<std::size_t>{8, 12, 6});
  const Polytope c4 = polytope_from_h(cube_h(4));
  CHECK(c4.f_vector() == std::vector<std::size_t>{16, 32, 24, 8});
  const auto bs = belts(c4);
  CHECK(bs.size() == 6);
  for (const auto& b : bs) CHECK(b.size() == 4);
  CHECK(venkov_parallelotope(c4));
  const auto zones = edge_zones(c3);
  CHECK(zones.size() == 3);
  for (const auto& z : zones) {
    CHECK(z.closed);
    CHECK(z.shortest() == Rational(2));
  }
}

TEST_CASE("24-cell invariants") {
  const Polytope& c = cell24();
  CHECK(c.f_vector() == std::vector<std::size_t>{24, 96, 96, 24});
  const auto& two_faces = c.faces(2);
  for (std::size_t f = 0; f < c.facets().size(); ++f) {
    const VertexSet& fv = c.facet_vertices(f);
    CHECK(fv.count() == 6);
    int triangles = 0;
    for (const auto& t : two_faces)
      if ((t & fv) == t) {
        CHECK(t.count() == 3);
        ++triangles;
      }
    CHECK(triangles == 8);
  }
  const auto bs = belts(c);
  CHECK(bs.size() == 16);
  for (const auto& b : bs) CHECK(b.size() == 6);
  const auto zones = edge_zones(c);
  CHECK(zones.size() == 12);
  for (const auto& z : zones) CHECK_FALSE(z.closed);
  CHECK(venkov_parallelotope(c));
  // P_V(D4) from its inequalities is the same type
  CHECK(canonical_certificate(voronoi_dn(4)) == canonical_certificate(c));
}

TEST_CASE("H/V round trip") {
  for (const Polytope& p : {cell24(), voronoi_dn(3), zonotope(cographic_k33_vectors().vectors)}) {
    const Polytope q = polytope_from_h(p.h_representation());
    CHECK(q.vertices() == p.vertices());
    CHECK(q.facets() == p.facets());
    CHECK(canonical_certificate(q) == canonical_certificate(p));
  }
}

TEST_CASE("graphic zonotopes against acyclic orientations and matroid hyperplanes") {
  for (const auto& lg : enumerate_rank4_subgraphs_k5()) {
    const auto gens = graphic_vectors(lg.graph).vectors;
    const Polytope z = zonotope(gens);
    CAPTURE(label_name(lg.label));
    CHECK(z.vertices().size() == oracle::count_acyclic_orientations(lg.graph));
    CHECK(z.facets().size() == 2 * oracle::count_flats(lg.graph, 3));
    const auto sums = signed_sums(gens);
    const std::set<Vector> all(sums.begin(), sums.end());
    for (const auto& v : z.vertices()) CHECK(all.count(v) == 1);
    CHECK(venkov_parallelotope(z));
  }
  const Polytope perm = zonotope(graphic_vectors(reference_graph(ConwayLabel::K5)).vectors);
  CHECK(perm.f_vector() == std::vector<std::size_t>{120, 240, 150, 30});
}

TEST_CASE("certificates are invariant under unimodular maps") {
  std::mt19937 rng(5);
  const auto k33 = cographic_k33_vectors().vectors;
  const std::string zc = canonical_certificate(zonotope(k33));
  const std::string cc = canonical_certificate(cell24());
  std::vector<Vector> roots;
  for (const auto& r : positive_roots(4)) {
    roots.push_back(r.vector());
    roots.push_back(-r.vector());
  }
  for (int trial = 0; trial < 4; ++trial) {
    const Matrix m = random_unimodular(rng);
    std::vector<Vector> mapped;
    for (const auto& g : k33) mapped.push_back(m * g);
    CHECK(canonical_certificate(zonotope(mapped)) == zc);
    std::vector<Vector> pts;
    std::vector<Vector> dirs;
    for (const auto& r : roots) pts.push_back(m * r);
    for (const auto& r : positive_roots(4)) dirs.push_back(m * r.vector());
    CHECK(canonical_certificate(hull_facets(pts, dirs)) == cc);
  }
  CHECK(zc != cc);
}

TEST_CASE("Venkov conditions reject non-parallelotopes") {
  // octagonal prism
  const std::vector<Vector> bad{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}};
  const Polytope z = zonotope(bad);
  CHECK(z.full_dimensional());
  const VenkovReport r = venkov_report(z);
  CHECK_FALSE(r.parallelotope());
  CHECK(r.flagged_belts == 1);
  // four generic vectors in space give the rhombic dodecahedron up to scaling
  CHECK(venkov_parallelotope(zonotope(std::vector<Vector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}})));
  // the octagon has one belt of 8 edges
  const Polytope oct = zonotope(std::vector<Vector>{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  const auto bs = belts(oct);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].size() == 8);
  CHECK(bs[0].flagged());
  CHECK(venkov_parallelotope(zonotope(std::vector<Vector>{{1, 0}, {0, 1}, {1, 1}})));
  // not centrally symmetric
  const Polytope simplex(2, {{0, 0}, {1, 0}, {0, 1}}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}});
  CHECK_FALSE(venkov_report(simplex).symmetric);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Polytope(2, {{2, 0}, {0, 1}, {0, 0}}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}}),
                  std::invalid_argument);
  CHECK_THROWS(polytope_from_h(HPolytope{2, {{{1, 0}, 1}}, {}}));
}

TEST_CASE("segments: add, erode, widths") {
  const Polytope c3 = polytope_from_h(cube_h(3));
  const Vector z{1, 1, 0};
  const Polytope p = add_segment(c3, z, Rational(1, 2));
  CHECK(p.f_vector() == std::vector<std::size_t>{12, 18, 8});  // hexagonal prism
  CHECK(min_fiber_length(p, z) == Rational(1));
  CHECK(width_positive(p, z));
  CHECK_FALSE(width_positive(c3, z));
  CHECK(min_fiber_length(c3, Vector{1, 0, 0}) == Rational(2));
  const Polytope back = erode_segment(p, z, Rational(1, 2));
  CHECK(back.vertices() == c3.vertices());
  CHECK_THROWS_AS(erode_segment(c3, Vector{1, 0, 0}, Rational(3)), std::invalid_argument);
  const auto zone = zone_along(p, z);
  REQUIRE(zone);
  CHECK(zone->closed);
  CHECK(zone->shortest() == Rational(1));
}

TEST_CASE("segment lengths do not change the type") {
  const RootMask u = static_cast<RootMask>((1u << 1) | (1u << 4) | (1u << 10));
  const std::string base = canonical_certificate(sum_cell24(u));
  const std::vector<Rational> lengths{Rational(1, 3), Rational(1), Rational(7, 2)};
  CHECK(canonical_certificate(sum_cell24(u, lengths)) == base);
}

TEST_CASE("linear optimization over vertices") {
  const Polytope c3 = polytope_from_h(cube_h(3));
  const Extremum hi = lp_extremum(c3, Vector{1, 1, 0}, Sense::Max);
  CHECK(hi.value == Rational(2));
  CHECK(hi.point == Vector{1, 1, -1});
  const Extremum lo = lp_extremum(cube_h(3), Vector{0, 0, 1}, Sense::Min);
  CHECK(lo.value == Rational(-1));
}

TEST_CASE("centrally symmetric point sets and centroids") {
  const std::vector<Vector> pts{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  CHECK(centrally_symmetric(pts) == Vector{1, 1});
  CHECK(centroid(pts) == Vector{1, 1});
  CHECK_FALSE(centrally_symmetric(std::vector<Vector>{{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("facet translations give face-to-face neighbours") {
  for (const Polytope& p : {cell24(), sum_cell24(static_cast<RootMask>(0x0111)), polytope_from_h(cube_h(4))}) {
    const auto t = facet_translations(p);
    REQUIRE(t.size() == p.facets().size());
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      // the opposite facet moved by t[f] is facet f
      std::size_t opp = p.facets().size();
      for (std::size_t g = 0; g < p.facets().size(); ++g)
        if (p.facets()[g].normal == -p.facets()[f].normal) opp = g;
      REQUIRE(opp < p.facets().size());
      std::set<Vector> moved;
      for (const auto& v : p.points(p.facet_vertices(opp))) moved.insert(v + t[f]);
      const auto own = p.points(p.facet_vertices(f));
      CHECK(moved == std::set<Vector>(own.begin(), own.end()));
    }
  }
}

TEST_CASE("zonotope refuses more than 12 generators") {
  std::vector<Vector> gens;
  for (int k = 0; k < 13; ++k) gens.push_back(Vector{1, k, k * k, 1});
  CHECK_THROWS_AS(zonotope(gens), std::invalid_argument);
}
