#include "invconn/linalg.hpp"

#include <algorithm>

namespace invconn {

namespace {

void check_same_shape(const Vec& a, const Vec& b) {
  if (a.basis != b.basis) throw BasisMismatchError("vectors live in different bases");
  if (a.size() != b.size()) throw SizeMismatchError("vector lengths differ");
}

// Row echelon form in place; returns pivot column of each used row.
std::vector<std::size_t> echelon(std::vector<std::vector<Rational>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv_pivot = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv_pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

}  // namespace

bool Vec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec& Vec::operator+=(const Vec& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Vec Vec::unit(std::size_t n, std::size_t i, Basis b) {
  Vec v(n, b);
  v.c[i] = Rational(1);
  return v;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw SizeMismatchError("matrix product shapes differ");
  Mat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

std::vector<Rational> Mat::col(std::size_t j) const {
  std::vector<Rational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const std::vector<Rational>& v) {
  if (v.size() != rows_) throw SizeMismatchError("column length differs from row count");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Rational trace(const Mat& a) {
  if (!a.is_square()) throw NonSquareError("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Mat commutator(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw SizeMismatchError("commutator needs equal square matrices");
  return a * b - b * a;
}

std::vector<Rational> mat_vec(const Mat& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw SizeMismatchError("matrix/vector size mismatch");
  std::vector<Rational> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) y[i] += a(i, j) * x[j];
  return y;
}

std::vector<Rational> solve(const Mat& a, const std::vector<Rational>& b) {
  if (!a.is_square()) throw NonSquareError("solve needs a square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) throw SizeMismatchError("right-hand side length differs");
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n] = b[i];
  }
  const auto pivots = echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMatrixError("matrix is singular");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

Vec solve(const Mat& a, const Vec& b) { return Vec(solve(a, b.c), b.basis); }

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw NonSquareError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = Rational(1);
  }
  const auto pivots = echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMatrixError("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
  return inv;
}

Rational det(const Mat& a) {
  if (!a.is_square()) throw NonSquareError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    const Rational inv_pivot = Rational(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] * inv_pivot;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::size_t rank(const Mat& a) {
  std::vector<std::vector<Rational>> rows(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return echelon(rows).size();
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors) {
  auto rows = vectors;
  return echelon(rows).size();
}

std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors) {
  auto rows = vectors;
  echelon(rows);
  return rows;
}

std::vector<std::vector<Rational>> null_space(const Mat& a) {
  std::vector<std::vector<Rational>> rows(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  const auto pivots = echelon(rows);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t freec = 0; freec < a.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(a.cols());
    v[freec] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace invconn
