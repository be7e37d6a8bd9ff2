#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "par4/polytope.hpp"
#include "par4/roots.hpp"

namespace par4 {

// {x : -1 <= x_i +- x_j <= 1}, n in {3, 4}.
HPolytope voronoi_dn_h(int n);
Polytope voronoi_dn(int n);

// Convex hull of the 24 roots of D4 (the root frame).
const Polytope& cell24();

// Facet normals (both signs) spanned by 3-subsets of the 12 roots.
const std::vector<Vector>& root_candidate_normals();

// Sum of segments lambda_k [-g_k, g_k] (lambda_k = 1 when lengths is empty).
// Throws std::invalid_argument for more than 12 generators.
Polytope zonotope(std::span<const Vector> generators, std::span<const Rational> lengths = {});

// 24-cell + Z(U) for a set of positive roots; U = 0 gives the 24-cell.
Polytope sum_cell24(RootMask u, std::span<const Rational> lengths = {});

struct PvzReport {
  std::size_t tau = 0;
  std::size_t pi = 0;
  bool parallelotope = false;
  std::size_t facets = 0;
  std::size_t belts3 = 0;
  std::size_t belts2 = 0;
  std::vector<std::string> mismatches;  // empty when everything agrees
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

// Facet and belt counts against 24+2|tau|, 16+3|tau|, |pi|, and for every
// root r: can_add_segment and Venkov of the sum plus S(r), both against
// r not being a completing root of a triple of U.
PvzReport pvz_validate(RootMask u);

struct SdnReport {
  int n = 0;
  std::size_t directions_tested = 0;
  std::size_t edge_directions = 0;     // actual edge directions of the polytope
  std::size_t formula_directions = 0;  // e(S) - e(complement of S) and e_i, up to sign
  std::size_t accepted = 0;         // by the belt test
  std::size_t accepted_venkov = 0;  // by Venkov on the actual sum
  std::size_t belts3 = 0;
  std::size_t belts_a = 0;
  std::size_t belts_b = 0;
  std::vector<std::string> mismatches;
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

// Every primitive z in [-2,2]^n up to sign, tested against the directions
// e(S) - e(complement) and e_i. For n = 3 the e_i are not edges of the
// rhombic dodecahedron but are still accepted.
SdnReport sdn_validate(int n);

struct DecompositionResult {
  Polytope core;
  std::vector<Vector> directions;  // canonical zone characteristics, in split order
  std::vector<Rational> lambdas;   // the split segment is lambda [-z, z]
};

// Picks the closed zone to split next among the given ones (non-empty).
using ZoneChooser = std::function<std::size_t(const std::vector<EdgeZone>&)>;

// Split off segments along closed zones (half the shortest edge each time)
// until no closed zone remains. Default order: smallest characteristic first.
DecompositionResult decompose(const Polytope& p, const ZoneChooser& choose = {});

}  // namespace par4
