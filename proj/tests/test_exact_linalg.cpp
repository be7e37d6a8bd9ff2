#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "par4/linalg.hpp"

using namespace par4;

namespace {

// Leibniz expansion over all permutations.
Rational leibniz(const Matrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Matrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(dist(rng), 1 + (dist(rng) & 3));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic normalizes and compares") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, -2).sign() == -1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational overflow falls back to GMP and agrees with mpq") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-(1LL << 62), 1LL << 62);
  for (int k = 0; k < 2000; ++k) {
    const long long a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
    const Rational x(a, b), y(c, d);
    mpq_class qx(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
    mpq_class qy(mpz_class(std::to_string(c)), mpz_class(std::to_string(d)));
    qx.canonicalize();
    qy.canonicalize();
    mpq_class sum = qx + qy, prod = qx * qy, quot = qx / qy;
    CHECK((x + y).to_mpq() == sum);
    CHECK((x * y).to_mpq() == prod);
    CHECK((x / y).to_mpq() == quot);
    CHECK(((x < y) == (qx < qy)));
  }
}

TEST_CASE("determinant matches the Leibniz expansion") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int k = 0; k < 20; ++k) {
      const Matrix m = random_matrix(rng, n, -5, 5);
      CHECK(determinant(m) == leibniz(m));
    }
  Matrix s(3, 3);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  s(2, 2) = 1;
  CHECK(determinant(s) == Rational(0));
  CHECK(rank(s) == 2);
}

TEST_CASE("maximal minors of e1, e2, e1+2e2") {
  const Matrix m(std::vector<Vector>{{1, 0}, {0, 1}, {1, 2}});
  auto v = maximal_minor_values(m);
  std::vector<Rational> expected{1, 2, -1};
  CHECK(v == expected);
}

TEST_CASE("solve, rank and orthogonal complement") {
  const Matrix a(std::vector<Vector>{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  const Vector b{1, 2, 3};
  auto x = solve_linear(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  const std::vector<Vector> vs{{1, 1, 0, 0}, {0, 1, 1, 0}};
  auto comp = orthogonal_complement(vs, 4);
  CHECK(comp.size() == 2);
  for (const auto& c : comp)
    for (const auto& v : vs) CHECK(dot(c, v).is_zero());
  std::vector<Vector> all = vs;
  all.insert(all.end(), comp.begin(), comp.end());
  CHECK(rank(all) == 4);
  CHECK(affine_dimension(std::vector<Vector>{{0, 0}, {1, 1}, {2, 2}}) == 1);
}

TEST_CASE("canonical direction is primitive with positive leading entry") {
  CHECK(canonical_direction(Vector{0, -2, 4, Rational(6)}) == Vector{0, 1, -2, -3});
  CHECK(canonical_direction(Vector{Rational(1, 2), Rational(1, 3)}) == Vector{3, 2});
  CHECK(parallel(Vector{1, -1, 0}, Vector{-3, 3, 0}));
  CHECK_FALSE(parallel(Vector{1, 0}, Vector{1, 1}));
}

TEST_CASE("first basis picks the lexicographically first independent rows") {
  const std::vector<Vector> vs{{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  CHECK(first_basis(vs) == std::vector<std::size_t>{0, 2, 4});
}
