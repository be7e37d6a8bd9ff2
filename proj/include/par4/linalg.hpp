#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "par4/rational.hpp"

namespace par4 {

// Exact vector of fixed dimension. Value type; lexicographically ordered so it
// can key ordered containers.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  Vector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Vector unit(std::size_t dim, std::size_t axis);
  static Vector from_ints(std::span<const long long> values);

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_integral() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Rational& s);
  Vector operator-() const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const Rational& s) { return a *= s; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }

  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector& a, const Vector& b) { return a.coords_ <=> b.coords_; }

  // "(1,-1/2,0,0)"
  [[nodiscard]] std::string str() const;

 private:
  std::vector<Rational> coords_;
};

Rational dot(const Vector& a, const Vector& b);

// Scales v to the primitive integer vector on the same ray (positive multiple).
Vector primitive(const Vector& v);

// Primitive integer representative of the line through v: first nonzero entry
// positive. Zero maps to zero.
Vector canonical_direction(const Vector& v);

// True iff a and b are nonzero multiples of each other.
bool parallel(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::vector<Vector> rows);
  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  [[nodiscard]] const Vector& row(std::size_t r) const { return rows_[r]; }
  [[nodiscard]] const std::vector<Vector>& row_vectors() const { return rows_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector column(std::size_t c) const;
  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& m) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::vector<Vector> rows_;
  std::size_t cols_ = 0;
};

// Exact rank over Q (fraction-free elimination).
std::size_t rank(const Matrix& m);
std::size_t rank(std::span<const Vector> vectors);

// Determinant of a square matrix by Bareiss elimination.
Rational determinant(const Matrix& m);

// Some solution x of A x = b, or nullopt when inconsistent. Free variables are
// set to zero, so the answer is deterministic; unique when A is square and
// nonsingular. Throws std::invalid_argument on a dimension mismatch.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

// Basis of {x : v.x = 0 for all v in vectors}, each canonicalized as a
// primitive integer direction. Throws on mixed dimensions.
std::vector<Vector> orthogonal_complement(std::span<const Vector> vectors, std::size_t dim);

// Indices of the lexicographically first maximal independent subset.
std::vector<std::size_t> first_basis(std::span<const Vector> vectors);

// Determinants of every k x k submatrix, k = rank(m), enumerated by row subset
// then column subset in lexicographic order. Zero minors are included.
std::vector<Rational> maximal_minor_values(const Matrix& m);

// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const Vector> points);

}  // namespace par4
