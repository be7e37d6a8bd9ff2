#include "par4/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "par4/canonical_form.hpp"

namespace par4 {

namespace {

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    f(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool satisfies(const Vector& x, const std::vector<Facet>& ineqs, const std::vector<Facet>& eqs) {
  for (const auto& f : ineqs)
    if (dot(f.normal, x) > f.rhs) return false;
  for (const auto& e : eqs)
    if (dot(e.normal, x) != e.rhs) return false;
  return true;
}

std::size_t rank_with(const std::vector<Facet>& eqs, const std::vector<const Vector*>& normals) {
  std::vector<Vector> rows;
  rows.reserve(eqs.size() + normals.size());
  for (const auto& e : eqs) rows.push_back(e.normal);
  for (const auto* n : normals) rows.push_back(*n);
  return rank(rows);
}

// Canonical equalities of the affine hull of points.
std::vector<Facet> affine_hull_equalities(const std::vector<Vector>& points, std::size_t ambient) {
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  std::vector<Facet> eqs;
  for (auto& n : orthogonal_complement(diffs, ambient)) {
    Rational rhs = dot(n, points[0]);
    eqs.push_back(Facet{std::move(n), std::move(rhs)});
  }
  return eqs;
}

}  // namespace

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : faces) out.push_back(level.size());
  return out;
}

Polytope::Polytope(std::size_t ambient_dim, std::vector<Vector> vertices, std::vector<Facet> inequalities)
    : ambient_(ambient_dim), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("Polytope: no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.size() > kMaxVertices) throw std::invalid_argument("Polytope: too many vertices");
  for (const auto& v : vertices_)
    if (v.dim() != ambient_) throw std::invalid_argument("Polytope: vertex of wrong dimension");

  equalities_ = affine_hull_equalities(vertices_, ambient_);
  const int d = static_cast<int>(ambient_ - equalities_.size());
  lattice_.dim = d;

  std::sort(inequalities.begin(), inequalities.end());
  inequalities.erase(std::unique(inequalities.begin(), inequalities.end()), inequalities.end());
  std::set<std::vector<std::size_t>> seen_faces;
  for (auto& f : inequalities) {
    if (f.normal.dim() != ambient_) throw std::invalid_argument("Polytope: inequality of wrong dimension");
    std::vector<std::size_t> tight;
    std::vector<Vector> tight_points;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Rational value = dot(f.normal, vertices_[i]);
      if (value > f.rhs)
        throw std::invalid_argument("Polytope: vertex " + vertices_[i].str() + " violates an inequality");
      if (value == f.rhs) {
        tight.push_back(i);
        tight_points.push_back(vertices_[i]);
      }
    }
    if (tight.size() == vertices_.size() || tight.empty()) continue;
    if (affine_dimension(tight_points) != d - 1) continue;
    if (!seen_faces.insert(tight).second) continue;
    VertexSet s;
    for (auto i : tight) s.set(i);
    facets_.push_back(std::move(f));
    facet_vertices_.push_back(s);
  }
  if (facets_.size() > kMaxFacets) throw std::invalid_argument("Polytope: too many facets");

  vertex_facets_.assign(vertices_.size(), FacetSet{});
  for (std::size_t f = 0; f < facets_.size(); ++f)
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (facet_vertices_[f].test(v)) vertex_facets_[v].set(f);

  std::unordered_map<FacetSet, std::size_t> rank_memo;
  auto face_dim = [&](const FacetSet& containing) {
    auto it = rank_memo.find(containing);
    if (it == rank_memo.end()) {
      std::vector<const Vector*> normals;
      for (std::size_t f = 0; f < facets_.size(); ++f)
        if (containing.test(f)) normals.push_back(&facets_[f].normal);
      it = rank_memo.emplace(containing, rank_with(equalities_, normals)).first;
    }
    return static_cast<int>(ambient_) - static_cast<int>(it->second);
  };

  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (face_dim(vertex_facets_[v]) != 0)
      throw std::invalid_argument("Polytope: " + vertices_[v].str() + " is not a vertex");
  }

  lattice_.faces.assign(static_cast<std::size_t>(std::max(d, 0)) + (d == 0 ? 1 : 0), {});
  if (d == 0) {
    VertexSet s;
    s.set(0);
    lattice_.faces[0].push_back(s);
    return;
  }
  lattice_.faces[static_cast<std::size_t>(d - 1)] = facet_vertices_;
  for (int k = d - 2; k >= 1; --k) {
    std::unordered_set<VertexSet> found;
    for (const auto& upper : lattice_.faces[static_cast<std::size_t>(k + 1)]) {
      for (const auto& fv : facet_vertices_) {
        VertexSet s = upper & fv;
        if (s.count() < 2 || s == upper || found.count(s)) continue;
        if (face_dim(facets_containing(s)) == k) found.insert(s);
      }
    }
    auto& level = lattice_.faces[static_cast<std::size_t>(k)];
    level.assign(found.begin(), found.end());
  }
  if (d >= 2) {
    auto& v0 = lattice_.faces[0];
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      VertexSet s;
      s.set(v);
      v0.push_back(s);
    }
  }
  auto bitset_less = [](const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < kMaxVertices; ++i)
      if (a.test(i) != b.test(i)) return a.test(i);
    return false;
  };
  for (auto& level : lattice_.faces) std::sort(level.begin(), level.end(), bitset_less);

  if (d >= 2) {
    for (const auto& ridge : lattice_.faces[static_cast<std::size_t>(d - 2)]) {
      if (facets_containing(ridge).count() != 2)
        throw std::runtime_error("Polytope: a ridge does not lie in exactly two facets (missing facet?)");
    }
  }
}

std::optional<std::size_t> Polytope::vertex_index(const Vector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Vector> Polytope::points(const VertexSet& s) const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (s.test(i)) out.push_back(vertices_[i]);
  return out;
}

FacetSet Polytope::facets_containing(const VertexSet& s) const {
  FacetSet out;
  out.set();
  bool any = false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!s.test(i)) continue;
    out &= vertex_facets_[i];
    any = true;
  }
  if (!any) out.reset();
  for (std::size_t f = facets_.size(); f < kMaxFacets; ++f) out.reset(f);
  return out;
}

const std::vector<VertexSet>& Polytope::faces(int k) const {
  static const std::vector<VertexSet> none;
  if (k < 0 || k >= static_cast<int>(lattice_.faces.size())) return none;
  return lattice_.faces[static_cast<std::size_t>(k)];
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dim() < 1) return out;
  if (dim() == 1) {
    out.emplace_back(0, 1);
    return out;
  }
  for (const auto& e : faces(1)) {
    std::size_t a = e._Find_first();
    std::size_t b = e._Find_next(a);
    out.emplace_back(a, b);
  }
  return out;
}

namespace {

bool bounded(std::size_t d, const std::vector<Facet>& ineqs, const std::vector<Facet>& eqs) {
  std::vector<Vector> rows;
  for (const auto& e : eqs) rows.push_back(e.normal);
  for (const auto& f : ineqs) rows.push_back(f.normal);
  if (rank(rows) < d) return false;
  // the recession cone is pointed; look for an extreme ray
  std::vector<Vector> eq_rows;
  for (const auto& e : eqs) eq_rows.push_back(e.normal);
  bool found_ray = false;
  const std::size_t r_eq = rank(eq_rows);
  if (r_eq + 1 > d) return true;
  for_each_subset(ineqs.size(), d - 1 - r_eq, [&](const std::vector<std::size_t>& pick) {
    if (found_ray) return;
    std::vector<Vector> sel = eq_rows;
    for (auto i : pick) sel.push_back(ineqs[i].normal);
    auto comp = orthogonal_complement(sel, d);
    if (comp.size() != 1) return;
    for (int s : {1, -1}) {
      Vector y = comp[0] * Rational(s);
      bool ok = true;
      for (const auto& f : ineqs)
        if (dot(f.normal, y) > Rational(0)) ok = false;
      if (ok) found_ray = true;
    }
  });
  return !found_ray;
}

}  // namespace

std::vector<Vector> vertices_of(const HPolytope& h) {
  const std::size_t d = h.dim;
  if (!bounded(d, h.facets, h.equalities)) throw std::invalid_argument("vertices_of: unbounded polyhedron");
  std::vector<Vector> eq_rows;
  for (const auto& e : h.equalities) eq_rows.push_back(e.normal);
  auto basis = first_basis(eq_rows);
  std::set<Vector> found;
  const std::size_t need = d - basis.size();
  for_each_subset(h.facets.size(), need, [&](const std::vector<std::size_t>& pick) {
    Matrix a(d, d);
    Vector b(d);
    std::size_t row = 0;
    auto put = [&](const Facet& f) {
      for (std::size_t c = 0; c < d; ++c) a(row, c) = f.normal[c];
      b[row] = f.rhs;
      ++row;
    };
    for (auto i : basis) put(h.equalities[i]);
    for (auto i : pick) put(h.facets[i]);
    if (determinant(a).is_zero()) return;
    auto x = solve_linear(a, b);
    if (x && satisfies(*x, h.facets, h.equalities)) found.insert(*x);
  });
  if (found.empty()) throw std::invalid_argument("vertices_of: empty polytope");
  return {found.begin(), found.end()};
}

Polytope polytope_from_h(const HPolytope& h) { return Polytope(h.dim, vertices_of(h), h.facets); }

std::vector<Vector> candidate_normals(std::span<const Vector> dirs, std::span<const Vector> eq_normals,
                                      std::size_t ambient, std::size_t target_dim) {
  std::set<Vector> normals;
  std::vector<Vector> canon;
  for (const auto& v : dirs) {
    if (v.is_zero()) continue;
    canon.push_back(canonical_direction(v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (target_dim == 0) return {};
  for_each_subset(canon.size(), target_dim - 1, [&](const std::vector<std::size_t>& pick) {
    std::vector<Vector> sel(eq_normals.begin(), eq_normals.end());
    for (auto i : pick) sel.push_back(canon[i]);
    auto comp = orthogonal_complement(sel, ambient);
    if (comp.size() == 1) normals.insert(comp[0]);
  });
  std::vector<Vector> out;
  for (const auto& n : normals) {
    out.push_back(n);
    out.push_back(-n);
  }
  return out;
}

Polytope hull_facets(std::span<const Vector> points, std::span<const Vector> candidate_directions) {
  if (points.empty()) throw std::invalid_argument("hull_facets: no points");
  const std::size_t d = points.front().dim();
  std::vector<Vector> pts(points.begin(), points.end());
  if (affine_dimension(pts) != static_cast<int>(d)) throw std::invalid_argument("hull_facets: points not full-dimensional");
  auto normals = candidate_normals(candidate_directions, {}, d, d);
  std::vector<Facet> ineqs;
  for (const auto& n : normals) {
    Rational h = dot(n, pts[0]);
    for (const auto& p : pts) h = std::max(h, dot(n, p));
    ineqs.push_back(Facet{n, h});
  }
  // keep the points where the tight candidate normals have full rank
  std::vector<Vector> verts;
  for (const auto& p : pts) {
    std::vector<Vector> tight;
    for (const auto& f : ineqs)
      if (dot(f.normal, p) == f.rhs) tight.push_back(f.normal);
    if (rank(tight) == d) verts.push_back(p);
  }
  if (verts.size() < d + 1) throw std::runtime_error("hull_facets: candidate directions miss facets");
  return Polytope(d, std::move(verts), std::move(ineqs));
}

Polytope minkowski_sum(const Polytope& base, std::span<const Segment> segments,
                       const std::vector<Vector>* candidate_normals) {
  const std::size_t d = base.ambient_dim();
  const std::size_t m = segments.size();
  if (m > 20) throw std::invalid_argument("minkowski_sum: too many segments");
  for (const auto& s : segments) {
    if (s.direction.dim() != d) throw std::invalid_argument("minkowski_sum: segment of wrong dimension");
    if (s.direction.is_zero()) throw std::invalid_argument("minkowski_sum: zero segment");
    if (s.lambda <= Rational(0)) throw std::invalid_argument("minkowski_sum: segment length must be positive");
  }
  const auto& bv = base.vertices();
  std::vector<Vector> dirs;
  for (std::size_t i = 1; i < bv.size(); ++i) dirs.push_back(bv[i] - bv[0]);
  for (const auto& s : segments) dirs.push_back(s.direction);
  auto eq_normals = orthogonal_complement(dirs, d);
  const std::size_t q_dim = d - eq_normals.size();

  std::vector<Vector> generated;
  if (!candidate_normals) {
    std::vector<Vector> edge_dirs;
    for (auto [a, b] : base.edges()) edge_dirs.push_back(bv[b] - bv[a]);
    for (const auto& s : segments) edge_dirs.push_back(s.direction);
    generated = par4::candidate_normals(edge_dirs, eq_normals, d, q_dim);
    candidate_normals = &generated;
  }

  struct SumFacet {
    Facet facet;
    VertexSet base_tight;
    std::uint32_t pos = 0;  // segments with normal . z > 0
    std::uint32_t neg = 0;
  };
  std::vector<SumFacet> facets;
  std::set<Vector> used;
  for (const auto& n : *candidate_normals) {
    if (!used.insert(n).second) continue;
    std::vector<Rational> values;
    values.reserve(bv.size());
    for (const auto& v : bv) values.push_back(dot(n, v));
    const Rational h = *std::max_element(values.begin(), values.end());
    SumFacet sf;
    std::vector<Vector> face_dirs;
    std::size_t first = bv.size();
    for (std::size_t i = 0; i < bv.size(); ++i) {
      if (values[i] != h) continue;
      sf.base_tight.set(i);
      if (first == bv.size()) first = i;
      else face_dirs.push_back(bv[i] - bv[first]);
    }
    Rational rhs = h;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational t = dot(n, segments[k].direction);
      if (t.is_zero()) {
        face_dirs.push_back(segments[k].direction);
      } else {
        (t > Rational(0) ? sf.pos : sf.neg) |= 1u << k;
        rhs += segments[k].lambda * abs(t);
      }
    }
    if (q_dim == 0 || rank(face_dirs) != q_dim - 1) continue;
    sf.facet = Facet{n, rhs};
    facets.push_back(std::move(sf));
  }
  if (facets.size() > kMaxFacets) throw std::invalid_argument("minkowski_sum: too many facets");

  std::unordered_map<FacetSet, bool> vertex_memo;
  std::set<Vector> points;
  for (std::size_t b = 0; b < bv.size(); ++b) {
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
      FacetSet tight;
      std::size_t count = 0;
      for (std::size_t f = 0; f < facets.size(); ++f) {
        const auto& sf = facets[f];
        if (sf.base_tight.test(b) && (sf.pos & ~s) == 0 && (sf.neg & s) == 0) {
          tight.set(f);
          ++count;
        }
      }
      if (q_dim > 0 && count < q_dim) continue;
      auto it = vertex_memo.find(tight);
      if (it == vertex_memo.end()) {
        std::vector<Vector> rows = eq_normals;
        for (std::size_t f = 0; f < facets.size(); ++f)
          if (tight.test(f)) rows.push_back(facets[f].facet.normal);
        it = vertex_memo.emplace(tight, rank(rows) == d).first;
      }
      if (!it->second) continue;
      Vector x = bv[b];
      for (std::size_t k = 0; k < m; ++k) {
        if (s >> k & 1) x += segments[k].direction * segments[k].lambda;
        else x -= segments[k].direction * segments[k].lambda;
      }
      points.insert(std::move(x));
    }
  }
  std::vector<Facet> ineqs;
  for (auto& sf : facets) ineqs.push_back(std::move(sf.facet));
  return Polytope(d, {points.begin(), points.end()}, std::move(ineqs));
}

Polytope add_segment(const Polytope& p, const Vector& z, const Rational& lambda) {
  if (lambda <= Rational(0)) throw std::invalid_argument("add_segment: lambda must be positive");
  const Segment s{z, lambda};
  return minkowski_sum(p, std::span<const Segment>(&s, 1));
}

Polytope erode_segment(const Polytope& p, const Vector& z, const Rational& lambda) {
  if (lambda <= Rational(0)) throw std::invalid_argument("erode_segment: lambda must be positive");
  if (z.is_zero()) throw std::invalid_argument("erode_segment: zero direction");
  const std::size_t d = p.ambient_dim();
  for (const auto& e : p.equalities())
    if (!dot(e.normal, z).is_zero()) throw std::invalid_argument("erode_segment: result is empty");
  std::vector<Facet> ineqs;
  for (const auto& f : p.facets()) ineqs.push_back(Facet{f.normal, f.rhs - lambda * abs(dot(f.normal, z))});
  const auto& eqs = p.equalities();

  // If p = q + S then every vertex of p is a shifted vertex of q.
  const Vector shift = z * lambda;
  std::set<Vector> candidates;
  bool summand = true;
  for (const auto& w : p.vertices()) {
    bool any = false;
    for (const Vector& x : {w - shift, w + shift}) {
      if (satisfies(x, ineqs, eqs)) {
        candidates.insert(x);
        any = true;
      }
    }
    if (!any) {
      summand = false;
      break;
    }
  }
  std::vector<Vector> verts;
  if (summand) {
    for (const auto& x : candidates) {
      std::vector<Vector> rows;
      for (const auto& e : eqs) rows.push_back(e.normal);
      for (const auto& f : ineqs)
        if (dot(f.normal, x) == f.rhs) rows.push_back(f.normal);
      if (rank(rows) == d) verts.push_back(x);
    }
  } else {
    verts = vertices_of(HPolytope{d, ineqs, eqs});
  }
  return Polytope(d, std::move(verts), std::move(ineqs));
}

std::optional<Vector> centrally_symmetric(std::span<const Vector> points) {
  if (points.empty()) return std::nullopt;
  std::vector<Vector> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const Vector sum = sorted.front() + sorted.back();
  for (const auto& p : sorted) {
    if (!std::binary_search(sorted.begin(), sorted.end(), sum - p)) return std::nullopt;
  }
  return sum * Rational(1, 2);
}

Vector centroid(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("centroid: no points");
  Vector sum(points.front().dim());
  for (const auto& p : points) sum += p;
  return sum * Rational(1, static_cast<long long>(points.size()));
}

namespace {

std::vector<Vector> translation_key(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end());
  const Vector base = pts.front();
  for (auto& p : pts) p -= base;
  return pts;
}

}  // namespace

std::vector<Belt> belts(const Polytope& p) {
  std::vector<Belt> out;
  if (p.dim() < 2) return out;
  std::map<std::vector<Vector>, std::size_t> class_of;
  std::vector<FacetSet> members;
  for (const auto& ridge : p.faces(p.dim() - 2)) {
    auto pts = p.points(ridge);
    auto key = translation_key(pts);
    for (auto& x : pts) x = -x;
    key = std::min(key, translation_key(std::move(pts)));
    auto [it, inserted] = class_of.emplace(std::move(key), members.size());
    if (inserted) members.emplace_back();
    members[it->second] |= p.facets_containing(ridge);
  }
  for (std::size_t c = 0; c < members.size(); ++c) {
    Belt b;
    b.ridge_class = c;
    for (std::size_t f = 0; f < p.facets().size(); ++f)
      if (members[c].test(f)) b.facets.push_back(f);
    out.push_back(std::move(b));
  }
  return out;
}

VenkovReport venkov_report(const Polytope& p) {
  VenkovReport r;
  r.symmetric = centrally_symmetric(p.vertices()).has_value();
  r.facets_symmetric = true;
  for (std::size_t f = 0; f < p.facets().size() && r.facets_symmetric; ++f) {
    r.facets_symmetric = centrally_symmetric(p.points(p.facet_vertices(f))).has_value();
  }
  for (const auto& b : belts(p)) {
    if (b.size() == 4) ++r.belts4;
    else if (b.size() == 6) ++r.belts6;
    else ++r.flagged_belts;
  }
  return r;
}

bool venkov_parallelotope(const Polytope& p) {
  if (!p.full_dimensional()) return false;
  return venkov_report(p).parallelotope();
}

Rational EdgeZone::shortest() const {
  if (regulators.empty()) throw std::logic_error("EdgeZone::shortest: empty zone");
  return *std::min_element(regulators.begin(), regulators.end());
}

std::vector<EdgeZone> edge_zones(const Polytope& p) {
  const auto& verts = p.vertices();
  auto edges = p.edges();
  std::map<Vector, EdgeZone> zones;
  std::map<std::pair<std::size_t, std::size_t>, Vector> zone_of_edge;
  for (auto e : edges) {
    const Vector d = verts[e.second] - verts[e.first];
    Vector z = canonical_direction(d);
    std::size_t i = 0;
    while (z[i].is_zero()) ++i;
    Rational rho = abs(d[i] / z[i]);
    auto& zone = zones[z];
    zone.characteristic = z;
    zone.edges.push_back(e);
    zone.regulators.push_back(std::move(rho));
    zone_of_edge.emplace(e, z);
  }
  std::map<Vector, bool> closed;
  for (const auto& [z, zone] : zones) closed[z] = true;
  for (const auto& face : p.faces(2)) {
    std::vector<std::size_t> idx;
    for (std::size_t i = face._Find_first(); i < kMaxVertices; i = face._Find_next(i)) idx.push_back(i);
    std::map<Vector, int> count;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        auto it = zone_of_edge.find({idx[a], idx[b]});
        if (it != zone_of_edge.end()) ++count[it->second];
      }
    for (const auto& [z, c] : count)
      if (c != 2) closed[z] = false;
  }
  std::vector<EdgeZone> out;
  for (auto& [z, zone] : zones) {
    zone.closed = closed[z];
    out.push_back(std::move(zone));
  }
  return out;
}

std::optional<EdgeZone> zone_along(const Polytope& p, const Vector& z) {
  const Vector c = canonical_direction(z);
  for (auto& zone : edge_zones(p))
    if (zone.characteristic == c) return zone;
  return std::nullopt;
}

Rational min_fiber_length(const Polytope& p, const Vector& z) {
  if (z.is_zero()) throw std::invalid_argument("min_fiber_length: zero direction");
  for (const auto& e : p.equalities())
    if (!dot(e.normal, z).is_zero()) return Rational(0);
  std::optional<Rational> best;
  for (const auto& x : p.vertices()) {
    std::optional<Rational> hi;
    std::optional<Rational> lo;
    for (const auto& f : p.facets()) {
      const Rational t = dot(f.normal, z);
      if (t.is_zero()) continue;
      const Rational bound = (f.rhs - dot(f.normal, x)) / t;
      if (t > Rational(0)) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    if (!hi || !lo) return Rational(0);  // z inside every facet hyperplane: only a point
    const Rational len = *hi - *lo;
    if (!best || len < *best) best = len;
  }
  return *best;
}

bool width_positive(const Polytope& p, const Vector& z) { return min_fiber_length(p, z) > Rational(0); }

bool can_add_segment(const Polytope& p, const Vector& z) {
  if (!venkov_parallelotope(p)) throw std::invalid_argument("can_add_segment: not a parallelotope");
  for (const auto& b : belts(p)) {
    if (b.size() != 6) continue;
    bool orth = false;
    for (auto f : b.facets) orth = orth || dot(p.facets()[f].normal, z).is_zero();
    if (!orth) return false;
  }
  return true;
}

Extremum lp_extremum(const Polytope& p, const Vector& objective, Sense sense) {
  const auto& verts = p.vertices();
  if (verts.empty()) throw std::invalid_argument("lp_extremum: empty polytope");
  std::size_t best = 0;
  Rational value = dot(objective, verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const Rational v = dot(objective, verts[i]);
    if (sense == Sense::Max ? v > value : v < value) {
      value = v;
      best = i;
    }
  }
  return Extremum{value, verts[best]};
}

Extremum lp_extremum(const HPolytope& h, const Vector& objective, Sense sense) {
  return lp_extremum(polytope_from_h(h), objective, sense);
}

std::string canonical_certificate(const Polytope& p) {
  const std::size_t nv = p.vertices().size();
  const std::size_t nf = p.facets().size();
  ColoredGraph g(nv + nf);
  for (std::size_t f = 0; f < nf; ++f) {
    g.colors[nv + f] = 1;
    for (std::size_t v = 0; v < nv; ++v)
      if (p.facet_vertices(f).test(v)) g.add_edge(v, nv + f);
  }
  const auto form = canonical_form(g);
  std::vector<std::vector<bool>> rows(nf, std::vector<bool>(nv, false));
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t row = form.label[nv + f] - nv;
    for (std::size_t v = 0; v < nv; ++v)
      if (p.facet_vertices(f).test(v)) rows[row][form.label[v]] = true;
  }
  std::ostringstream os;
  os << 'v' << nv << 'f' << nf << ':';
  static const char* hex = "0123456789abcdef";
  for (std::size_t r = 0; r < nf; ++r) {
    if (r) os << '.';
    for (std::size_t v = 0; v < nv; v += 4) {
      int nibble = 0;
      for (std::size_t b = 0; b < 4 && v + b < nv; ++b)
        if (rows[r][v + b]) nibble |= 1 << (3 - b);
      os << hex[nibble];
    }
  }
  return os.str();
}

std::vector<Vector> facet_translations(const Polytope& p) {
  std::vector<Vector> out;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    out.push_back(centroid(p.points(p.facet_vertices(f))) * Rational(2));
  }
  return out;
}

}  // namespace par4
