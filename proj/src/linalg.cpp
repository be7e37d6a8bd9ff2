#include "par4/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace par4 {

Vector Vector::unit(std::size_t dim, std::size_t axis) {
  Vector v(dim);
  v[axis] = 1;
  return v;
}

Vector Vector::from_ints(std::span<const long long> values) {
  Vector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Vector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.is_integer(); });
}

Vector& Vector::operator+=(const Vector& rhs) {
  if (rhs.dim() != dim()) throw std::invalid_argument("Vector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  if (rhs.dim() != dim()) throw std::invalid_argument("Vector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vector Vector::operator-() const {
  Vector out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

Vector primitive(const Vector& v) {
  if (v.is_zero()) return v;
  mpz_class l = 1;
  for (const auto& c : v.coords()) {
    mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& c : v.coords()) {
    mpz_class n = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(mpq_class(l, g));
  return v * scale;
}

Vector canonical_direction(const Vector& v) {
  Vector p = primitive(v);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i].is_zero()) continue;
    if (p[i].sign() < 0) p = -p;
    break;
  }
  return p;
}

bool parallel(const Vector& a, const Vector& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return canonical_direction(a) == canonical_direction(b);
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows, Vector(cols)), cols_(cols) {}

Matrix::Matrix(std::vector<Vector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().dim();
  for (const auto& r : rows_) {
    if (r.dim() != cols_) throw std::invalid_argument("Matrix: ragged rows");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = rows_[r][c];
  return t;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v[r] = rows_[r][c];
  return v;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.dim() != cols_) throw std::invalid_argument("Matrix*Vector: dimension mismatch");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = dot(rows_[r], v);
  return out;
}

Matrix Matrix::operator*(const Matrix& m) const {
  if (m.rows() != cols_) throw std::invalid_argument("Matrix*Matrix: dimension mismatch");
  Matrix out(rows(), m.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational s;
      for (std::size_t k = 0; k < cols_; ++k) s += rows_[r][k] * m(k, c);
      out(r, c) = s;
    }
  return out;
}

namespace {

using Rows = std::vector<std::vector<Rational>>;

// Clears denominators row by row so Bareiss steps divide exactly.
Rows integral_rows(std::span<const Vector> vectors) {
  Rows rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.is_integral()) {
      rows.push_back(v.coords());
    } else {
      rows.push_back(primitive(v).coords());
    }
  }
  return rows;
}

// In-place Bareiss forward elimination; returns rank. When `det` is non-null
// and the matrix is square, receives the determinant.
std::size_t bareiss(Rows& a, std::size_t cols, Rational* det) {
  const std::size_t n = a.size();
  std::size_t r = 0;
  Rational prev = 1;
  int swaps = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) {
      if (det) *det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(a[piv], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det && n == cols) {
    if (r < n) {
      *det = 0;
    } else {
      *det = swaps % 2 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
    }
  }
  return r;
}

// Reduced row echelon form with pivot columns.
std::vector<std::size_t> rref(Rows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  Rows rows = integral_rows(vectors);
  return bareiss(rows, vectors.front().dim(), nullptr);
}

std::size_t rank(const Matrix& m) { return rank(std::span<const Vector>(m.row_vectors())); }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return 1;
  Rows rows;
  Rational scale = 1;
  for (const auto& v : m.row_vectors()) {
    Vector p = v.is_integral() ? v : primitive(v);
    if (!v.is_integral()) {
      // v = p * (v_i / p_i) for any nonzero coordinate
      for (std::size_t i = 0; i < v.dim(); ++i)
        if (!p[i].is_zero()) {
          scale *= v[i] / p[i];
          break;
        }
    }
    rows.push_back(p.coords());
  }
  Rational det;
  bareiss(rows, m.cols(), &det);
  return det * scale;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim()) throw std::invalid_argument("solve_linear: A.rows != b.dim");
  const std::size_t n = a.cols();
  Rows aug;
  aug.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r).coords();
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  auto pivots = rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::vector<Vector> orthogonal_complement(std::span<const Vector> vectors, std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw std::invalid_argument("orthogonal_complement: dimension mismatch");
  }
  Rows rows;
  for (const auto& v : vectors) rows.push_back(v.coords());
  auto pivots = rref(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    Vector x(dim);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][f];
    basis.push_back(canonical_direction(x));
  }
  return basis;
}

std::vector<std::size_t> first_basis(std::span<const Vector> vectors) {
  std::vector<std::size_t> chosen;
  std::vector<Vector> sel;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    sel.push_back(vectors[i]);
    if (rank(sel) == sel.size()) {
      chosen.push_back(i);
    } else {
      sel.pop_back();
    }
  }
  return chosen;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Rational> maximal_minor_values(const Matrix& m) {
  const std::size_t k = rank(m);
  std::vector<Rational> out;
  if (k == 0) return out;
  auto row_sets = all_subsets(m.rows(), k);
  auto col_sets = all_subsets(m.cols(), k);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      Matrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      out.push_back(determinant(sub));
    }
  }
  return out;
}

int affine_dimension(std::span<const Vector> points) {
  if (points.empty()) return -1;
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(diffs));
}

}  // namespace par4
