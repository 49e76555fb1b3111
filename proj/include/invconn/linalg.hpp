#ifndef INVCONN_LINALG_HPP
#define INVCONN_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "invconn/rational.hpp"

namespace invconn {

/// Which basis a coefficient vector is expressed in.
enum class Basis : unsigned char { g, m };

/// Coefficient vector tagged with the basis it lives in.
struct Vec {
  std::vector<Rational> c;
  Basis basis = Basis::g;

  Vec() = default;
  Vec(std::size_t n, Basis b) : c(n), basis(b) {}
  Vec(std::vector<Rational> coeffs, Basis b) : c(std::move(coeffs)), basis(b) {}

  std::size_t size() const { return c.size(); }
  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& s, Vec v) { return v *= s; }
  Vec operator-() const;

  friend bool operator==(const Vec& a, const Vec& b) {
    return a.basis == b.basis && a.c == b.c;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  /// i-th unit vector of an n-dimensional space.
  static Vec unit(std::size_t n, std::size_t i, Basis b);
};

/// Dense row-major matrix of rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const;

  Mat transpose() const;
  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Rational& s, Mat m) { return m *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// Column j as a plain coefficient vector.
  std::vector<Rational> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Rational>& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

/// Sum of diagonal entries. Throws NonSquareError.
Rational trace(const Mat& a);

/// A*B - B*A. Throws SizeMismatchError unless both are square of equal size.
Mat commutator(const Mat& a, const Mat& b);

std::vector<Rational> mat_vec(const Mat& a, const std::vector<Rational>& x);

/// Solves A*x = b by exact Gaussian elimination.
/// Throws SingularMatrixError when A is not invertible.
std::vector<Rational> solve(const Mat& a, const std::vector<Rational>& b);
Vec solve(const Mat& a, const Vec& b);

/// Exact inverse; throws SingularMatrixError.
Mat inverse(const Mat& a);

/// Exact determinant of a square matrix.
Rational det(const Mat& a);

/// Rank over the rationals (works for any shape).
std::size_t rank(const Mat& a);

/// Rank of the subspace spanned by the given coefficient vectors.
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors);

/// Reduced basis of the span (row-echelon representatives).
std::vector<std::vector<Rational>> span_basis(const std::vector<std::vector<Rational>>& vectors);

/// Basis of the kernel {x : A x = 0}.
std::vector<std::vector<Rational>> null_space(const Mat& a);

}  // namespace invconn

#endif
