#include "invconn/connection.hpp"

namespace invconn {

namespace {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
  // packed index for i < j
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

Mat ProductTable::of(const Vec& x) const {
  if (x.basis != Basis::m || x.size() != k())
    throw BasisMismatchError("ProductTable::of expects an m-basis vector");
  Mat m(k(), k());
  for (std::size_t i = 0; i < k(); ++i)
    if (!x[i].is_zero()) m += x[i] * L[i];
  return m;
}

Mat ProductTable::r_of_basis(std::size_t i) const {
  // column j of R_{e_i} is L_{e_j}(e_i), i.e. column i of L[j]
  Mat m(k(), k());
  for (std::size_t j = 0; j < k(); ++j)
    for (std::size_t r = 0; r < k(); ++r) m(r, j) = L[j](r, i);
  return m;
}

Mat ProductTable::r_of(const Vec& x) const {
  if (x.basis != Basis::m || x.size() != k())
    throw BasisMismatchError("ProductTable::r_of expects an m-basis vector");
  Mat m(k(), k());
  for (std::size_t i = 0; i < k(); ++i)
    if (!x[i].is_zero()) m += x[i] * r_of_basis(i);
  return m;
}

PairVecTable::PairVecTable(std::size_t k, Vec zero)
    : k_(k), zero_(std::move(zero)), packed_(k * (k - 1) / 2, zero_) {}

void PairVecTable::set(std::size_t i, std::size_t j, Vec v) {
  packed_[pair_index(i, j, k_)] = std::move(v);
}

Vec PairVecTable::at(std::size_t i, std::size_t j) const {
  if (i == j) return zero_;
  if (i < j) return packed_[pair_index(i, j, k_)];
  return -packed_[pair_index(j, i, k_)];
}

bool PairVecTable::is_zero() const {
  for (const auto& v : packed_)
    if (!v.is_zero()) return false;
  return true;
}

CurvatureTensor::CurvatureTensor(std::size_t k, std::size_t msize)
    : k_(k), msize_(msize), packed_(k * (k - 1) / 2, Mat(msize, msize)) {}

void CurvatureTensor::set(std::size_t i, std::size_t j, Mat m) {
  packed_[pair_index(i, j, k_)] = std::move(m);
}

Mat CurvatureTensor::at(std::size_t i, std::size_t j) const {
  if (i == j) return Mat(msize_, msize_);
  if (i < j) return packed_[pair_index(i, j, k_)];
  return -packed_[pair_index(j, i, k_)];
}

bool CurvatureTensor::is_zero() const {
  for (const auto& m : packed_)
    if (!m.is_zero()) return false;
  return true;
}

bool TriTable::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

ProductTable nomizu_product(const SymplecticSpace& s, const ConnectionParams& p) {
  s.require_validated();
  const std::size_t k = s.k();
  ProductTable table{p, std::vector<Mat>(k, Mat(k, k))};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // rhs[l] = a omega([e_i,e_j]_m, e_l) + b omega([e_i,e_l]_m, e_j)
      std::vector<Rational> rhs(k);
      for (std::size_t l = 0; l < k; ++l) {
        Rational v;
        if (!p.a.is_zero())
          v += p.a * s.omega(s.space().bracket_m_basis(i, j), Vec::unit(k, l, Basis::m));
        if (!p.b.is_zero())
          v += p.b * s.omega(s.space().bracket_m_basis(i, l), Vec::unit(k, j, Basis::m));
        rhs[l] = v;
      }
      table.L[i].set_col(j, s.solve_omega_pairing(rhs).c);
    }
  }
  return table;
}

Mat d_endo(const SymplecticSpace& s, const Vec& x, const Vec& y) {
  s.require_validated();
  const auto& sp = s.space();
  if (x.basis != Basis::m || y.basis != Basis::m || x.size() != sp.k() || y.size() != sp.k())
    throw BasisMismatchError("d_endo expects m-basis vectors");
  const std::size_t k = sp.k();
  const Vec y_g = sp.embed_m(y);
  Mat d(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    // [[x, e_col]_h, y]_m
    Vec h_part(sp.algebra().dim(), Basis::g);
    for (std::size_t i = 0; i < k; ++i)
      if (!x[i].is_zero()) h_part += x[i] * sp.bracket_h_basis(i, col);
    const Vec out = sp.project_m(sp.algebra().bracket(h_part, y_g));
    for (std::size_t r = 0; r < k; ++r) d(r, col) = out[r];
  }
  return d;
}

Mat d_endo_basis(const SymplecticSpace& s, std::size_t i, std::size_t j) {
  const std::size_t k = s.k();
  return d_endo(s, Vec::unit(k, i, Basis::m), Vec::unit(k, j, Basis::m));
}

PairVecTable torsion(const SymplecticSpace& s, const ProductTable& prod) {
  s.require_validated();
  const std::size_t k = s.k();
  PairVecTable t(k, Vec(k, Basis::m));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vec v(prod.L[i].col(j), Basis::m);
      v -= Vec(prod.L[j].col(i), Basis::m);
      v -= s.space().bracket_m_basis(i, j);
      t.set(i, j, std::move(v));
    }
  return t;
}

TriTable n_tensor(const SymplecticSpace& s, const ProductTable& prod) {
  s.require_validated();
  const std::size_t k = s.k();
  TriTable n(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Vec lij(prod.L[i].col(j), Basis::m);
      for (std::size_t l = 0; l < k; ++l) {
        const Vec lil(prod.L[i].col(l), Basis::m);
        n.at(i, j, l) = -s.omega(lij, Vec::unit(k, l, Basis::m)) -
                        s.omega(Vec::unit(k, j, Basis::m), lil);
      }
    }
  return n;
}

CurvatureTensor curvature(const SymplecticSpace& s, const ProductTable& prod) {
  s.require_validated();
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  CurvatureTensor curv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Mat kij = commutator(prod.L[i], prod.L[j]);
      kij -= prod.of(sp.bracket_m_basis(i, j));
      kij -= sp.ad_m(sp.bracket_h_basis(i, j));
      curv.set(i, j, std::move(kij));
    }
  return curv;
}

CurvatureTensor curvature_zero_one_closed(const SymplecticSpace& s) {
  s.require_validated();
  const std::size_t k = s.k();
  std::vector<Mat> dstar(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      dstar[i * k + j] = s.omega_adjoint(d_endo_basis(s, i, j));
  CurvatureTensor curv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      curv.set(i, j, dstar[i * k + j] - dstar[j * k + i]);
  return curv;
}

CurvatureTensor curvature_natural_closed(const SymplecticSpace& s) {
  s.require_validated();
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const ProductTable l01 = nomizu_product(s, {Rational(0), Rational(1)});
  const CurvatureTensor k01 = curvature_zero_one_closed(s);
  const Rational ninth(1, 9), two_ninths(2, 9), five_halves(5, 2);
  CurvatureTensor curv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vec& bm = sp.bracket_m_basis(i, j);
      Mat first = l01.r_of(bm);
      first -= commutator(l01.r_of_basis(i), l01.r_of_basis(j));
      first -= Rational(2) * l01.of(bm);
      const Mat k01ij = k01.at(i, j);
      Mat second = k01ij - s.omega_adjoint(k01ij);
      second -= five_halves * sp.ad_m(sp.bracket_h_basis(i, j));
      curv.set(i, j, ninth * first + two_ninths * second);
    }
  return curv;
}

Mat ricci_contract(const CurvatureTensor& curv) {
  const std::size_t k = curv.k();
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Mat> row;
    row.reserve(k);
    for (std::size_t l = 0; l < k; ++l) row.push_back(curv.at(i, l));
    for (std::size_t j = 0; j < k; ++j) {
      Rational t;
      for (std::size_t l = 0; l < k; ++l) t += row[l](l, j);  // (K(e_i,e_l) e_j)_l
      r(i, j) = t;
    }
  }
  return r;
}

Mat ricci(const SymplecticSpace& s, const ProductTable& prod) {
  return ricci_contract(curvature(s, prod));
}

Mat ricci_zero_one_closed(const SymplecticSpace& s) {
  s.require_validated();
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const Vec u = s.u_vector();
  const Mat l10_u = sp.l10(u);
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& li = sp.l10_basis(i);
    for (std::size_t j = 0; j < k; ++j) {
      const Mat& lj = sp.l10_basis(j);
      Rational v = Rational(2) * trace(li * lj);
      v += Rational(2) * trace(li * s.omega_adjoint(lj));
      v += Rational(2) * s.omega(Vec(l10_u.col(i), Basis::m), Vec::unit(k, j, Basis::m));
      v -= trace(d_endo_basis(s, i, j));
      r(i, j) = v;
    }
  }
  return r;
}

Mat ricci_natural_closed(const SymplecticSpace& s) {
  s.require_validated();
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const Vec u = s.u_vector();
  const Mat l10_u = sp.l10(u);
  const Mat ric01 = ricci_zero_one_closed(s);
  const Rational ninth(1, 9), two_ninths(2, 9), five_halves(5, 2);
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& li = sp.l10_basis(i);
    for (std::size_t j = 0; j < k; ++j) {
      const Mat& lj = sp.l10_basis(j);
      Rational first = trace(li * lj);
      first += s.omega(Vec::unit(k, i, Basis::m), Vec(l10_u.col(j), Basis::m));
      Rational second = ric01(i, j);
      second -= trace(d_endo_basis(s, j, i));
      second -= five_halves * trace(d_endo_basis(s, i, j));
      r(i, j) = ninth * first + two_ninths * second;
    }
  }
  return r;
}

}  // namespace invconn
