#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "par4/linalg.hpp"

namespace par4 {

// Root e_i + sign * e_j of D_n with 1 <= i < j <= n, the representative with
// positive e_i coefficient.
struct Root {
  int i = 1;
  int j = 2;
  int sign = 1;

  [[nodiscard]] Vector vector(std::size_t n = 4) const;
  // "12+", "34-"
  [[nodiscard]] std::string symbol() const;
  static Root parse(std::string_view symbol);
  // Position in positive_roots(4): pairs 12,13,14,23,24,34, minus before plus.
  [[nodiscard]] int index() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.index() <=> b.index(); }
};

// All e_i +- e_j, i < j, in the order 12-, 12+, 13-, ... (n(n-1) roots).
// Throws std::invalid_argument unless 2 <= n <= 5.
std::vector<Root> positive_roots(int n);

// Canonical root parallel to v, or throws std::invalid_argument.
Root root_of(const Vector& v);

bool orthogonal(const Root& a, const Root& b);

// Subsets of the 12 positive roots of D_4, bit k = positive_roots(4)[k].
using RootMask = std::uint16_t;
constexpr int kRootCount = 12;
constexpr RootMask kAllRoots = 0x0fff;

std::vector<Root> roots_of(RootMask mask);
RootMask mask_of(std::span<const Root> roots);
std::vector<Vector> root_vectors(RootMask mask);
std::string mask_symbols(RootMask mask);  // "12-,12+,34-"

struct Quadruple {
  std::array<Root, 4> roots;
  [[nodiscard]] RootMask mask() const;
};

// One per pair partition 12|34, 13|24, 14|23.
std::vector<Quadruple> quadruples();

struct Triple {
  std::array<Root, 3> roots;  // ascending
  Root completion;            // the unique root orthogonal to all three
};

// The unique root orthogonal to three mutually orthogonal roots.
Root completing_root(const Root& a, const Root& b, const Root& c);

// Mutually orthogonal 3-subsets of U, in lexicographic order.
std::vector<Triple> tau(std::span<const Root> roots);
std::vector<Triple> tau(RootMask mask);

// Orthogonal pairs of U that lie in no triple of U.
std::vector<std::pair<Root, Root>> pi(std::span<const Root> roots);
std::vector<std::pair<Root, Root>> pi(RootMask mask);

enum class TriadClass { A4MinusE, K33Dual };

struct Triad {
  std::array<Root, 3> roots;  // completions, ordered by quadruple 12|34, 13|24, 14|23
  int minus_count = 0;
  TriadClass cls = TriadClass::A4MinusE;
};

// cls is read off the parity of minus_count. This agrees with the matroid
// class when the three completions lie in a common 3-index set (e.g. 34,24,23)
// but not when they share one index (12,13,14): those are all A4-e.
// U must be the union of three disjoint triples, one in each quadruple;
// throws std::invalid_argument otherwise.
Triad triad_of(std::span<const Root> roots);
Triad triad_of(RootMask mask);

// Signed permutation of coordinates: x -> y with y[perm[k]] = signs[k] * x[k].
struct SignedPermutation {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> signs{1, 1, 1, 1};

  [[nodiscard]] Root apply(const Root& r) const;
  [[nodiscard]] RootMask apply(RootMask mask) const;
};

// The hyperoctahedral group B_4 (384 elements).
const std::vector<SignedPermutation>& signed_permutations();

// Least mask in the B_4 orbit of `mask`.
RootMask orbit_representative(RootMask mask);

// All linear maps preserving the 24 roots (order 1152), each stored as its
// action on the 12 positive roots up to sign.
using RootPermutation = std::array<std::uint8_t, kRootCount>;
const std::vector<RootPermutation>& root_automorphisms();
RootMask apply(const RootPermutation& g, RootMask mask);
RootMask automorphism_representative(RootMask mask);

// Unimodularity of every subset of the 12 roots, indexed by mask. Computed once.
const std::vector<bool>& unimodular_root_subsets();

struct UnextendibleClass {
  std::string name;  // "quadruple", "A4-e", "K33*"
  RootMask representative = 0;
  std::size_t size = 0;
  std::vector<RootMask> members;
};

struct UnextendibleReport {
  std::vector<RootMask> systems;          // all unextendible unimodular subsets, ascending
  std::vector<UnextendibleClass> classes; // by matroid certificate
  std::size_t orbit_count = 0;            // B_4 orbits among `systems`
  std::size_t automorphism_orbit_count = 0;
  std::size_t three_triple_sets = 0;
  std::size_t even_triads = 0;
  std::size_t odd_triads = 0;
  std::size_t parity_mismatches = 0;      // sets whose triad parity disagrees with the matroid class
  bool parity_matches_class = false;      // even <-> A4-e and odd <-> K33* on all 64
};

UnextendibleReport unextendible_unimodular_subsystems();

// Integer matrix with columns (1,1,0,0), (1,-1,0,0), (0,0,1,1), (0,0,1,-1).
Matrix frame_map();

}  // namespace par4
