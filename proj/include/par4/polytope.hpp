#pragma once

#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "par4/linalg.hpp"

namespace par4 {

constexpr std::size_t kMaxVertices = 512;
constexpr std::size_t kMaxFacets = 128;
using VertexSet = std::bitset<kMaxVertices>;
using FacetSet = std::bitset<kMaxFacets>;

// normal . x <= rhs
struct Facet {
  Vector normal;
  Rational rhs;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

// Inequalities plus optional equalities (normal . x == rhs).
struct HPolytope {
  std::size_t dim = 0;
  std::vector<Facet> facets;
  std::vector<Facet> equalities;
};

// The segment lambda * [-direction, direction].
struct Segment {
  Vector direction;
  Rational lambda{1};
};

// faces[k] holds the k-dimensional faces as vertex sets, k = 0 .. dim-1,
// sorted. The polytope itself is not stored.
struct FaceLattice {
  int dim = -1;
  std::vector<std::vector<VertexSet>> faces;

  [[nodiscard]] std::vector<std::size_t> f_vector() const;
};

// Bounded convex polytope given by both descriptions. Vertices are sorted
// lexicographically, facets by (normal, rhs). Lower-dimensional polytopes keep
// their affine hull as canonical equalities and their relative facets.
class Polytope {
 public:
  Polytope() = default;

  // Keeps the inequalities that define facets (first one per vertex set) and
  // drops the rest. Throws std::invalid_argument when a point violates an
  // inequality or is not a vertex, and std::runtime_error when the facets do
  // not close up (some ridge not in exactly two facets).
  Polytope(std::size_t ambient_dim, std::vector<Vector> vertices, std::vector<Facet> inequalities);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] int dim() const { return lattice_.dim; }
  [[nodiscard]] bool full_dimensional() const { return dim() == static_cast<int>(ambient_); }

  [[nodiscard]] const std::vector<Vector>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }
  [[nodiscard]] const std::vector<Facet>& equalities() const { return equalities_; }
  [[nodiscard]] const VertexSet& facet_vertices(std::size_t f) const { return facet_vertices_[f]; }
  [[nodiscard]] const FaceLattice& lattice() const { return lattice_; }
  [[nodiscard]] HPolytope h_representation() const { return {ambient_, facets_, equalities_}; }

  [[nodiscard]] std::optional<std::size_t> vertex_index(const Vector& v) const;
  [[nodiscard]] std::vector<Vector> points(const VertexSet& s) const;
  // Facets containing every vertex of s.
  [[nodiscard]] FacetSet facets_containing(const VertexSet& s) const;
  [[nodiscard]] const std::vector<VertexSet>& faces(int k) const;
  // Edges as (lower, higher) vertex index pairs, in lattice order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] std::vector<std::size_t> f_vector() const { return lattice_.f_vector(); }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equalities_;
  std::vector<VertexSet> facet_vertices_;
  std::vector<FacetSet> vertex_facets_;
  FaceLattice lattice_;
};

// Every vertex of {x : facets, equalities} by trying all choices of tight
// constraints. Throws std::invalid_argument if unbounded or empty.
std::vector<Vector> vertices_of(const HPolytope& h);
Polytope polytope_from_h(const HPolytope& h);

// Both signs of every normal to a (target_dim-1)-subset of directions that
// lies in the orthogonal complement of eq_normals and is determined by it.
std::vector<Vector> candidate_normals(std::span<const Vector> directions, std::span<const Vector> eq_normals,
                                      std::size_t ambient, std::size_t target_dim);

// Convex hull of full-dimensional points. Candidate normals come from
// (dim-1)-subsets of candidate_directions; throws std::runtime_error when
// they miss a facet (detected by the closure checks of Polytope).
Polytope hull_facets(std::span<const Vector> points, std::span<const Vector> candidate_directions);

// base + sum of segments. candidate_normals, when given, must contain every
// facet normal of the result (both signs); otherwise they are generated from
// edge directions of base and the segment directions.
Polytope minkowski_sum(const Polytope& base, std::span<const Segment> segments,
                       const std::vector<Vector>* candidate_normals = nullptr);
Polytope add_segment(const Polytope& p, const Vector& z, const Rational& lambda);

// Largest Q with Q + lambda[-z,z] contained in p, i.e. every rhs lowered by
// lambda |normal . z|. Throws std::invalid_argument when the result is empty.
Polytope erode_segment(const Polytope& p, const Vector& z, const Rational& lambda);

std::optional<Vector> centrally_symmetric(std::span<const Vector> points);
Vector centroid(std::span<const Vector> points);

struct Belt {
  std::vector<std::size_t> facets;  // ascending facet indices
  std::size_t ridge_class = 0;      // index into the ridge translation classes
  [[nodiscard]] std::size_t size() const { return facets.size(); }
  [[nodiscard]] bool flagged() const { return size() != 4 && size() != 6; }
};

// Ridges grouped up to translation and central reflection; one belt per
// class with all facets that contain a ridge of the class.
std::vector<Belt> belts(const Polytope& p);

struct VenkovReport {
  bool symmetric = false;
  bool facets_symmetric = false;
  std::size_t belts4 = 0;
  std::size_t belts6 = 0;
  std::size_t flagged_belts = 0;
  [[nodiscard]] bool parallelotope() const { return symmetric && facets_symmetric && flagged_belts == 0; }
};
VenkovReport venkov_report(const Polytope& p);
bool venkov_parallelotope(const Polytope& p);

struct EdgeZone {
  Vector characteristic;                                  // canonical primitive direction
  std::vector<std::pair<std::size_t, std::size_t>> edges; // vertex index pairs
  std::vector<Rational> regulators;                       // edge = regulator * characteristic
  bool closed = false;

  [[nodiscard]] Rational shortest() const;
};

// Sorted by characteristic.
std::vector<EdgeZone> edge_zones(const Polytope& p);
std::optional<EdgeZone> zone_along(const Polytope& p, const Vector& z);

// Minimum over the polytope of the length of its chords parallel to z,
// in units of z. Zero when z leaves the affine hull.
Rational min_fiber_length(const Polytope& p, const Vector& z);
bool width_positive(const Polytope& p, const Vector& z);

// Every 3-belt has a facet normal orthogonal to z. Throws std::invalid_argument
// when p fails Venkov's conditions.
bool can_add_segment(const Polytope& p, const Vector& z);

enum class Sense { Min, Max };
struct Extremum {
  Rational value;
  Vector point;
};
// Optimum over the vertices; ties go to the lexicographically smallest vertex.
Extremum lp_extremum(const Polytope& p, const Vector& objective, Sense sense);
Extremum lp_extremum(const HPolytope& h, const Vector& objective, Sense sense);

// Canonical form of the vertex/facet incidence: "v<n>f<m>:" followed by the
// incidence rows of the facets in canonical order as hex bitmaps.
std::string canonical_certificate(const Polytope& p);

// 2 * centroid of each facet (the lattice vector to the neighbour across it).
std::vector<Vector> facet_translations(const Polytope& p);

}  // namespace par4
