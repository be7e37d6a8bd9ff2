#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "par4/graphs.hpp"
#include "par4/roots.hpp"

using namespace par4;

namespace {

RootMask mask(std::initializer_list<const char*> symbols) {
  std::vector<Root> roots;
  for (auto s : symbols) roots.push_back(Root::parse(s));
  return mask_of(roots);
}

// Triples of vectors of rank 2 (3-element circuits).
int three_circuits(RootMask m) {
  const auto vs = root_vectors(m);
  int count = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c)
        count += rank(std::vector<Vector>{vs[a], vs[b], vs[c]}) == 2 ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("positive roots of D4 and their symbols") {
  const auto roots = positive_roots(4);
  REQUIRE(roots.size() == 12);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    CHECK(roots[k].index() == static_cast<int>(k));
    CHECK(Root::parse(roots[k].symbol()) == roots[k]);
    CHECK(root_of(-roots[k].vector()) == roots[k]);
    CHECK(dot(roots[k].vector(), roots[k].vector()) == Rational(2));
  }
  CHECK(Root::parse("34-").vector() == Vector{0, 0, 1, -1});
  CHECK(positive_roots(3).size() == 6);
  CHECK_THROWS_AS(positive_roots(6), std::invalid_argument);
  CHECK_THROWS_AS(root_of(Vector{1, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("orthogonal roots are exactly those in a common quadruple") {
  const auto roots = positive_roots(4);
  for (const auto& a : roots)
    for (const auto& b : roots) {
      if (a == b) continue;
      bool same = false;
      for (const auto& q : quadruples()) {
        const RootMask qm = q.mask();
        same = same || ((qm >> a.index() & 1) && (qm >> b.index() & 1));
      }
      CHECK(orthogonal(a, b) == same);
      CHECK(orthogonal(a, b) == dot(a.vector(), b.vector()).is_zero());
    }
  CHECK(quadruples().size() == 3);
}

TEST_CASE("triples, completing roots, tau and pi") {
  CHECK(completing_root(Root::parse("12-"), Root::parse("12+"), Root::parse("34-")) == Root::parse("34+"));
  const RootMask row2 = mask({"12-", "12+", "34-", "13-", "13+", "24-", "14-", "14+", "23-"});
  CHECK(tau(row2).size() == 3);
  CHECK(pi(row2).empty());
  const RootMask row43 = mask({"13+", "24-", "14-", "14+"});
  CHECK(tau(row43).empty());
  CHECK(pi(row43).size() == 2);
  for (const auto& t : tau(kAllRoots))
    for (const auto& r : t.roots) CHECK(orthogonal(r, t.completion));
  CHECK(tau(kAllRoots).size() == 12);
}

TEST_CASE("symmetry groups of D4") {
  CHECK(signed_permutations().size() == 384);
  const auto& g = root_automorphisms();
  CHECK(g.size() == 1152);
  // -1 fixes every root line, so only half the group acts faithfully
  std::set<RootPermutation> distinct(g.begin(), g.end());
  CHECK(distinct.size() == 576);
  // automorphisms preserve orthogonality
  const auto roots = positive_roots(4);
  for (std::size_t k = 0; k < g.size(); k += 37)
    for (const auto& a : roots)
      for (const auto& b : roots)
        CHECK(orthogonal(a, b) == orthogonal(roots[g[k][static_cast<std::size_t>(a.index())]],
                                             roots[g[k][static_cast<std::size_t>(b.index())]]));
}

TEST_CASE("unimodular subset table agrees with direct tests") {
  const auto& table = unimodular_root_subsets();
  REQUIRE(table.size() == 4096);
  for (unsigned m = 0; m < 4096; m += 7) CHECK(table[m] == is_unimodular(root_vectors(static_cast<RootMask>(m))));
}

TEST_CASE("every quadruple-free root subset is unimodular") {
  const auto& table = unimodular_root_subsets();
  for (unsigned m = 0; m < 4096; ++m) {
    bool free = true;
    for (const auto& q : quadruples()) free = free && (m & q.mask()) != q.mask();
    if (free) CHECK(table[m]);
  }
}

TEST_CASE("unextendible unimodular subsystems") {
  const UnextendibleReport r = unextendible_unimodular_subsystems();
  CHECK(r.systems.size() == 67);
  REQUIRE(r.classes.size() == 3);
  std::map<std::string, std::size_t> sizes;
  for (const auto& c : r.classes) {
    sizes[c.name] = c.size;
    for (RootMask m : c.members) CHECK(std::popcount(m) == (c.name == "quadruple" ? 4 : 9));
  }
  CHECK(sizes["quadruple"] == 3);
  CHECK(sizes["A4-e"] == 48);
  CHECK(sizes["K33*"] == 16);
  CHECK(r.automorphism_orbit_count == 3);
  CHECK(r.orbit_count == 4);
  CHECK(r.three_triple_sets == 64);
  CHECK(r.even_triads == 32);
  CHECK(r.odd_triads == 32);
  // A4-e has seven 3-circuits, K33* six
  for (const auto& c : r.classes) {
    if (c.name == "quadruple") continue;
    for (RootMask m : c.members) CHECK(three_circuits(m) == (c.name == "A4-e" ? 7 : 6));
  }
}

TEST_CASE("triad parity decides the class for triangle triads only") {
  const UnextendibleReport r = unextendible_unimodular_subsystems();
  std::set<RootMask> k33;
  for (const auto& c : r.classes)
    if (c.name == "K33*") k33.insert(c.members.begin(), c.members.end());
  std::size_t triangle = 0, star = 0, mismatches = 0;
  for (const auto& c : r.classes) {
    if (c.name == "quadruple") continue;
    for (RootMask m : c.members) {
      const Triad t = triad_of(m);
      std::set<int> idx;
      for (const auto& root : t.roots) {
        idx.insert(root.i);
        idx.insert(root.j);
      }
      const bool is_k33 = k33.count(m) > 0;
      const bool parity_says_k33 = t.cls == TriadClass::K33Dual;
      if (idx.size() == 3) {
        ++triangle;
        CHECK(parity_says_k33 == is_k33);
      } else {
        ++star;
        CHECK_FALSE(is_k33);
      }
      mismatches += parity_says_k33 != is_k33 ? 1 : 0;
    }
  }
  CHECK(triangle + star == 64);
  CHECK(mismatches == r.parity_mismatches);
  CHECK(mismatches == 16);
  CHECK_FALSE(r.parity_matches_class);
}

TEST_CASE("frame map carries the quadruple 12|34 to a coordinate frame") {
  const Matrix f = frame_map();
  CHECK(abs(determinant(f)) == Rational(4));
}
