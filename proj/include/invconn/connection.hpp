#ifndef INVCONN_CONNECTION_HPP
#define INVCONN_CONNECTION_HPP

#include <vector>

#include "invconn/reductive.hpp"

namespace invconn {

struct ConnectionParams {
  Rational a, b;
};

/// Nomizu product of the two-parameter family: L[i] is the matrix of
/// L_{e_i} on the m-basis.
struct ProductTable {
  ConnectionParams params;
  std::vector<Mat> L;

  std::size_t k() const { return L.size(); }
  /// Matrix of L_x for an m-coordinate vector x.
  Mat of(const Vec& x) const;
  /// R_x = (y -> L_y(x)) as a matrix; derived view of the same table.
  Mat r_of(const Vec& x) const;
  Mat r_of_basis(std::size_t i) const;
};

/// Vec-valued antisymmetric table over m-basis pairs (diagonal zero).
class PairVecTable {
 public:
  PairVecTable(std::size_t k, Vec zero);
  void set(std::size_t i, std::size_t j, Vec v);  // i < j
  Vec at(std::size_t i, std::size_t j) const;     // antisymmetric extension
  bool is_zero() const;
  std::size_t k() const { return k_; }

 private:
  std::size_t k_;
  Vec zero_;
  std::vector<Vec> packed_;
};

/// Mat-valued antisymmetric table (curvature operator per basis pair).
class CurvatureTensor {
 public:
  CurvatureTensor(std::size_t k, std::size_t msize);
  void set(std::size_t i, std::size_t j, Mat m);  // i < j
  Mat at(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  std::size_t k() const { return k_; }

 private:
  std::size_t k_;
  std::size_t msize_;
  std::vector<Mat> packed_;
};

/// Scalar table over m-basis triples.
class TriTable {
 public:
  explicit TriTable(std::size_t k) : k_(k), v_(k * k * k) {}
  Rational& at(std::size_t i, std::size_t j, std::size_t l) {
    return v_[(i * k_ + j) * k_ + l];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t l) const {
    return v_[(i * k_ + j) * k_ + l];
  }
  bool is_zero() const;
  std::size_t k() const { return k_; }

 private:
  std::size_t k_;
  std::vector<Rational> v_;
};

/// Builds L^{a,b} by exact linear solves against omega; the defining
/// identity omega(L_x y, z) = a omega([x,y]_m, z) + b omega([x,z]_m, y)
/// then holds exactly.
ProductTable nomizu_product(const SymplecticSpace& s, const ConnectionParams& p);

/// D_{x,y}: z -> [[x,z]_h, y] as a matrix on m (x, y in m-coordinates).
Mat d_endo(const SymplecticSpace& s, const Vec& x, const Vec& y);
Mat d_endo_basis(const SymplecticSpace& s, std::size_t i, std::size_t j);

/// T(x,y) = L_x y - L_y x - [x,y]_m over basis pairs.
PairVecTable torsion(const SymplecticSpace& s, const ProductTable& prod);

/// N[x][y][z] = -omega(L_x y, z) - omega(y, L_x z); zero iff the
/// connection preserves omega.
TriTable n_tensor(const SymplecticSpace& s, const ProductTable& prod);

/// K(x,y) = [L_x, L_y] - L_{[x,y]_m} - ad_{[x,y]_h} over basis pairs.
CurvatureTensor curvature(const SymplecticSpace& s, const ProductTable& prod);

/// Closed form of the Zero-One curvature: K(x,y) = D*_{x,y} - D*_{y,x}.
CurvatureTensor curvature_zero_one_closed(const SymplecticSpace& s);

/// Closed form of the natural symplectic curvature assembled from the
/// Zero-One data; equals curvature(nomizu_product(1/3,1/3)) exactly.
CurvatureTensor curvature_natural_closed(const SymplecticSpace& s);

/// ric(x,y) = tr(z -> K(x,z) y).
Mat ricci(const SymplecticSpace& s, const ProductTable& prod);
Mat ricci_contract(const CurvatureTensor& curv);

/// Closed trace formula for ric^{0,1}.
Mat ricci_zero_one_closed(const SymplecticSpace& s);

/// Closed trace formula for ric^s.
Mat ricci_natural_closed(const SymplecticSpace& s);

}  // namespace invconn

#endif
