#include "par4/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace par4 {

HPolytope voronoi_dn_h(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("voronoi_dn: n must be 3 or 4");
  HPolytope h;
  h.dim = static_cast<std::size_t>(n);
  for (const auto& r : positive_roots(n)) {
    const Vector v = r.vector(h.dim);
    h.facets.push_back(Facet{v, Rational(1)});
    h.facets.push_back(Facet{-v, Rational(1)});
  }
  return h;
}

Polytope voronoi_dn(int n) { return polytope_from_h(voronoi_dn_h(n)); }

const Polytope& cell24() {
  static const Polytope p = [] {
    std::vector<Vector> roots;
    for (const auto& r : positive_roots(4)) {
      roots.push_back(r.vector());
      roots.push_back(-r.vector());
    }
    std::vector<Vector> dirs = root_vectors(kAllRoots);
    return hull_facets(roots, dirs);
  }();
  return p;
}

const std::vector<Vector>& root_candidate_normals() {
  static const std::vector<Vector> normals = [] {
    auto dirs = root_vectors(kAllRoots);
    return candidate_normals(dirs, {}, 4, 4);
  }();
  return normals;
}

namespace {

std::vector<Segment> make_segments(std::span<const Vector> generators, std::span<const Rational> lengths) {
  if (!lengths.empty() && lengths.size() != generators.size())
    throw std::invalid_argument("segment lengths do not match generators");
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < generators.size(); ++k)
    segs.push_back(Segment{generators[k], lengths.empty() ? Rational(1) : lengths[k]});
  return segs;
}

}  // namespace

Polytope zonotope(std::span<const Vector> generators, std::span<const Rational> lengths) {
  if (generators.empty()) throw std::invalid_argument("zonotope: no generators");
  if (generators.size() > 12) throw std::invalid_argument("zonotope: more than 12 generators");
  const std::size_t d = generators.front().dim();
  const Polytope origin(d, {Vector(d)}, {});
  auto segs = make_segments(generators, lengths);
  return minkowski_sum(origin, segs);
}

Polytope sum_cell24(RootMask u, std::span<const Rational> lengths) {
  if (u == 0) return cell24();
  auto gens = root_vectors(u);
  auto segs = make_segments(gens, lengths);
  return minkowski_sum(cell24(), segs, &root_candidate_normals());
}

PvzReport pvz_validate(RootMask u) {
  PvzReport r;
  const auto triples = tau(u);
  r.tau = triples.size();
  r.pi = pi(u).size();
  const Polytope sum = sum_cell24(u);
  const VenkovReport v = venkov_report(sum);
  r.parallelotope = v.parallelotope();
  r.facets = sum.facets().size();
  r.belts3 = v.belts6;
  r.belts2 = v.belts4;
  auto expect = [&](const char* what, std::size_t got, std::size_t want) {
    if (got != want)
      r.mismatches.push_back(std::string(what) + ": measured " + std::to_string(got) + ", formula " +
                             std::to_string(want));
  };
  if (!r.parallelotope) {
    r.mismatches.push_back("sum is not a parallelotope");
    return r;
  }
  expect("facets", r.facets, 24 + 2 * r.tau);
  expect("3-belts", r.belts3, 16 + 3 * r.tau);
  expect("2-belts", r.belts2, r.pi);
  std::set<Root> completions;
  for (const auto& t : triples) completions.insert(t.completion);
  for (const auto& root : positive_roots(4)) {
    const bool predicted = completions.count(root) == 0;
    const bool belt_test = can_add_segment(sum, root.vector());
    const bool direct = venkov_parallelotope(add_segment(sum, root.vector(), Rational(1)));
    if (belt_test != predicted)
      r.mismatches.push_back("belt test for " + root.symbol() + " gives " + (belt_test ? "accept" : "reject"));
    if (direct != predicted)
      r.mismatches.push_back("Venkov of sum + S(" + root.symbol() + ") gives " + (direct ? "accept" : "reject"));
  }
  return r;
}

SdnReport sdn_validate(int n) {
  SdnReport r;
  r.n = n;
  const Polytope p = voronoi_dn(n);
  const auto d = static_cast<std::size_t>(n);
  std::set<Vector> actual_edges;
  for (const auto& zone : edge_zones(p)) actual_edges.insert(zone.characteristic);
  r.edge_directions = actual_edges.size();
  // e(S) - e(complement of S) and e_i
  std::set<Vector> edge_dirs;
  for (unsigned s = 0; s < (1u << n); ++s) {
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (s >> i & 1) ? 1 : -1;
    edge_dirs.insert(canonical_direction(v));
  }
  for (std::size_t i = 0; i < d; ++i) edge_dirs.insert(Vector::unit(d, i));
  r.formula_directions = edge_dirs.size();
  if (r.formula_directions != (std::size_t{1} << (n - 1)) + d)
    r.mismatches.push_back("formula direction count " + std::to_string(r.formula_directions));

  std::vector<long long> coords(d, -2);
  for (;;) {
    Vector z = Vector::from_ints(coords);
    if (!z.is_zero() && canonical_direction(z) == z) {
      ++r.directions_tested;
      const bool parallel_edge = edge_dirs.count(z) > 0;
      const bool belt_test = can_add_segment(p, z);
      const bool direct = venkov_parallelotope(add_segment(p, z, Rational(1)));
      if (belt_test) ++r.accepted;
      if (direct) ++r.accepted_venkov;
      if (belt_test != parallel_edge)
        r.mismatches.push_back("belt test disagrees with edge parallelism for " + z.str());
      if (direct != parallel_edge) r.mismatches.push_back("Venkov disagrees with edge parallelism for " + z.str());
    }
    std::size_t k = 0;
    while (k < d && coords[k] == 2) coords[k++] = -2;
    if (k == d) break;
    ++coords[k];
  }

  // 3-belt normals: three roots on one index triple, 0 "+" roots (a) or 2 (b)
  for (const auto& belt : belts(p)) {
    if (belt.size() != 6) continue;
    ++r.belts3;
    std::set<Vector> normals;
    for (auto f : belt.facets) normals.insert(canonical_direction(p.facets()[f].normal));
    std::set<int> indices;
    int plus = 0;
    bool roots_only = normals.size() == 3;
    for (const auto& nv : normals) {
      Root root;
      try {
        root = root_of(nv);
      } catch (const std::invalid_argument&) {
        roots_only = false;
        continue;
      }
      indices.insert(root.i);
      indices.insert(root.j);
      plus += root.sign > 0 ? 1 : 0;
    }
    if (roots_only && indices.size() == 3 && plus == 0) {
      ++r.belts_a;
    } else if (roots_only && indices.size() == 3 && plus == 2) {
      ++r.belts_b;
    } else {
      r.mismatches.push_back("3-belt matches neither pattern");
    }
  }
  return r;
}

DecompositionResult decompose(const Polytope& p, const ZoneChooser& choose) {
  DecompositionResult out;
  out.core = p;
  for (;;) {
    std::vector<EdgeZone> closed;
    for (auto& zone : edge_zones(out.core))
      if (zone.closed) closed.push_back(std::move(zone));
    if (closed.empty()) break;
    const std::size_t pick = choose ? choose(closed) : 0;
    if (pick >= closed.size()) throw std::out_of_range("decompose: zone chooser returned a bad index");
    const EdgeZone& zone = closed[pick];
    const Rational lambda = zone.shortest() * Rational(1, 2);
    out.core = erode_segment(out.core, zone.characteristic, lambda);
    out.directions.push_back(zone.characteristic);
    out.lambdas.push_back(lambda);
  }
  return out;
}

}  // namespace par4
