#include "invconn/reductive.hpp"

#include <algorithm>

namespace invconn {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

ReductiveSpace::ReductiveSpace(LieAlgebra alg, std::vector<std::size_t> h_idx,
                               std::vector<std::size_t> m_idx)
    : alg_(std::move(alg)), h_idx_(std::move(h_idx)), m_idx_(std::move(m_idx)) {
  if (!alg_.validated())
    throw NotValidatedError("reductive space over an unvalidated algebra");
  std::vector<bool> seen(alg_.dim(), false);
  for (auto i : h_idx_) {
    if (i >= alg_.dim() || seen[i]) throw Error("h/m indices are not a partition");
    seen[i] = true;
  }
  for (auto i : m_idx_) {
    if (i >= alg_.dim() || seen[i]) throw Error("h/m indices are not a partition");
    seen[i] = true;
  }
  if (h_idx_.size() + m_idx_.size() != alg_.dim())
    throw Error("h/m indices do not cover the basis");
  m_pos_.assign(alg_.dim(), npos);
  for (std::size_t p = 0; p < m_idx_.size(); ++p) m_pos_[m_idx_[p]] = p;
  build_caches();
}

void ReductiveSpace::build_caches() {
  const std::size_t n = k();
  bm_.assign(n * n, Vec(n, Basis::m));
  bh_.assign(n * n, Vec(alg_.dim(), Basis::g));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec b = alg_.bracket_basis(m_idx_[i], m_idx_[j]);
      auto [h_part, m_part] = split(b);
      bm_[i * n + j] = project_m(m_part);
      bh_[i * n + j] = std::move(h_part);
    }
  l10_.clear();
  l10_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) m(r, j) = bm_[i * n + j][r];
    l10_.push_back(std::move(m));
  }
}

ReductiveReport ReductiveSpace::check_reductive() const {
  ReductiveReport rep;
  for (auto a : h_idx_) {
    for (auto b : h_idx_) {
      const Vec br = alg_.bracket_basis(a, b);
      for (auto mi : m_idx_) {
        if (!br[mi].is_zero()) {
          rep.h_closed_ok = false;
          if (!rep.first_violation) rep.first_violation = {a, b};
        }
      }
    }
    for (auto b : m_idx_) {
      const Vec br = alg_.bracket_basis(a, b);
      for (auto hi : h_idx_) {
        if (!br[hi].is_zero()) {
          rep.reductivity_ok = false;
          if (!rep.first_violation) rep.first_violation = {a, b};
        }
      }
    }
  }
  return rep;
}

std::pair<Vec, Vec> ReductiveSpace::split(const Vec& x) const {
  if (x.basis != Basis::g || x.size() != alg_.dim())
    throw BasisMismatchError("split expects a g-basis vector");
  Vec xh(alg_.dim(), Basis::g), xm(alg_.dim(), Basis::g);
  for (auto i : h_idx_) xh[i] = x[i];
  for (auto i : m_idx_) xm[i] = x[i];
  return {xh, xm};
}

Vec ReductiveSpace::project_m(const Vec& x_g) const {
  if (x_g.basis != Basis::g || x_g.size() != alg_.dim())
    throw BasisMismatchError("project_m expects a g-basis vector");
  Vec r(k(), Basis::m);
  for (std::size_t p = 0; p < m_idx_.size(); ++p) r[p] = x_g[m_idx_[p]];
  return r;
}

Vec ReductiveSpace::project_h_coords(const Vec& x_g) const {
  if (x_g.basis != Basis::g || x_g.size() != alg_.dim())
    throw BasisMismatchError("project_h_coords expects a g-basis vector");
  Vec r(h_idx_.size(), Basis::g);
  for (std::size_t p = 0; p < h_idx_.size(); ++p) r[p] = x_g[h_idx_[p]];
  return r;
}

Vec ReductiveSpace::embed_m(const Vec& x_m) const {
  if (x_m.basis != Basis::m || x_m.size() != k())
    throw BasisMismatchError("embed_m expects an m-basis vector");
  Vec r(alg_.dim(), Basis::g);
  for (std::size_t p = 0; p < m_idx_.size(); ++p) r[m_idx_[p]] = x_m[p];
  return r;
}

Vec ReductiveSpace::bracket_m(const Vec& x, const Vec& y) const {
  if (x.basis != Basis::m || y.basis != Basis::m || x.size() != k() || y.size() != k())
    throw BasisMismatchError("bracket_m expects m-basis vectors");
  Vec r(k(), Basis::m);
  for (std::size_t i = 0; i < k(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < k(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      const Vec& b = bm_[i * k() + j];
      for (std::size_t l = 0; l < k(); ++l) r[l] += f * b[l];
    }
  }
  return r;
}

const Vec& ReductiveSpace::bracket_m_basis(std::size_t i, std::size_t j) const {
  return bm_[i * k() + j];
}

const Vec& ReductiveSpace::bracket_h_basis(std::size_t i, std::size_t j) const {
  return bh_[i * k() + j];
}

Mat ReductiveSpace::l10(const Vec& x) const {
  if (x.basis != Basis::m || x.size() != k())
    throw BasisMismatchError("l10 expects an m-basis vector");
  Mat m(k(), k());
  for (std::size_t i = 0; i < k(); ++i)
    if (!x[i].is_zero()) m += x[i] * l10_[i];
  return m;
}

const Mat& ReductiveSpace::l10_basis(std::size_t i) const { return l10_[i]; }

Mat ReductiveSpace::ad_m(const Vec& v_g) const {
  if (v_g.basis != Basis::g || v_g.size() != alg_.dim())
    throw BasisMismatchError("ad_m expects a g-basis vector");
  Mat m(k(), k());
  for (std::size_t j = 0; j < k(); ++j) {
    const Vec b = alg_.bracket(v_g, Vec::unit(alg_.dim(), m_idx_[j], Basis::g));
    for (std::size_t i = 0; i < k(); ++i) m(i, j) = b[m_idx_[i]];
  }
  return m;
}

bool ReductiveSpace::is_locally_symmetric() const {
  for (std::size_t i = 0; i < k(); ++i)
    for (std::size_t j = i + 1; j < k(); ++j)
      if (!bracket_m_basis(i, j).is_zero()) return false;
  return true;
}

bool ReductiveSpace::isotropy_faithful() const {
  if (h_idx_.empty()) return true;
  // Kernel of h -> End(m): stack the vectorized ad_m(f_a) as columns.
  Mat stacked(k() * k(), h_idx_.size());
  for (std::size_t a = 0; a < h_idx_.size(); ++a) {
    const Mat ada = ad_m(Vec::unit(alg_.dim(), h_idx_[a], Basis::g));
    for (std::size_t r = 0; r < k(); ++r)
      for (std::size_t c = 0; c < k(); ++c) stacked(r * k() + c, a) = ada(r, c);
  }
  return rank(stacked) == h_idx_.size();
}

SymplecticSpace::SymplecticSpace(ReductiveSpace space, Mat omega)
    : space_(std::move(space)), omega_(std::move(omega)) {
  if (omega_.rows() != space_.k() || omega_.cols() != space_.k())
    throw SizeMismatchError("omega must be k x k over the m-basis");
}

SymplecticReport SymplecticSpace::validate(const std::vector<Mat>* autos) {
  SymplecticReport rep;
  const std::size_t n = k();

  for (std::size_t i = 0; i < n && rep.skew_ok; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (omega_(i, j) != -omega_(j, i)) {
        rep.skew_ok = false;
        break;
      }

  rep.nondegenerate_ok = rank(omega_) == n;

  // 2-cocycle: cyclic sum of omega([x,y]_m, z) over all basis triples.
  for (std::size_t i = 0; i < n && rep.cocycle_ok; ++i)
    for (std::size_t j = i + 1; j < n && rep.cocycle_ok; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        Rational s = omega(space_.bracket_m_basis(i, j), Vec::unit(n, l, Basis::m));
        s += omega(space_.bracket_m_basis(l, i), Vec::unit(n, j, Basis::m));
        s += omega(space_.bracket_m_basis(j, l), Vec::unit(n, i, Basis::m));
        if (!s.is_zero()) {
          rep.cocycle_ok = false;
          break;
        }
      }

  // Infinitesimal Ad(H)-invariance: omega([f,x],y) + omega(x,[f,y]) = 0.
  for (auto hi : space_.h_indices()) {
    const Mat adh = space_.ad_m(Vec::unit(space_.algebra().dim(), hi, Basis::g));
    // Matrix form: adh^T Omega + Omega adh = 0.
    if (!(adh.transpose() * omega_ + omega_ * adh).is_zero()) {
      rep.inf_invariant_ok = false;
      break;
    }
  }

  if (autos) {
    bool ok = true;
    for (const Mat& a : *autos) {
      if (a.rows() != n || a.cols() != n) {
        ok = false;
        break;
      }
      if (a.transpose() * omega_ * a != omega_) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const Vec lhs(mat_vec(a, space_.bracket_m_basis(i, j).c), Basis::m);
          const Vec rhs = space_.bracket_m(Vec(a.col(i), Basis::m), Vec(a.col(j), Basis::m));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
      if (!ok) break;
    }
    rep.autos_ok = ok;
  }

  validated_ = rep.ok();
  if (validated_) omega_inv_ = inverse(omega_);
  return rep;
}

void SymplecticSpace::require_validated() const {
  if (!validated_)
    throw NotValidatedError("symplectic space used before successful validate()");
}

Rational SymplecticSpace::omega(const Vec& x, const Vec& y) const {
  if (x.basis != Basis::m || y.basis != Basis::m || x.size() != k() || y.size() != k())
    throw BasisMismatchError("omega expects m-basis vectors");
  Rational s;
  for (std::size_t i = 0; i < k(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < k(); ++j)
      if (!y[j].is_zero()) s += x[i] * omega_(i, j) * y[j];
  }
  return s;
}

const Mat& SymplecticSpace::omega_inverse() const {
  require_validated();
  return omega_inv_;
}

Mat SymplecticSpace::omega_adjoint(const Mat& f) const {
  require_validated();
  if (f.rows() != k() || f.cols() != k())
    throw SizeMismatchError("omega_adjoint expects a k x k matrix");
  return omega_inv_ * f.transpose() * omega_;
}

Vec SymplecticSpace::solve_omega_pairing(const std::vector<Rational>& rhs) const {
  require_validated();
  // omega(v, e_l) = (Omega^T v)_l, so solve against the transpose.
  return Vec(solve(omega_.transpose(), rhs), Basis::m);
}

Vec SymplecticSpace::u_vector() const {
  require_validated();
  if (!u_cache_) {
    std::vector<Rational> t(k());
    for (std::size_t i = 0; i < k(); ++i) t[i] = trace(space_.l10_basis(i));
    u_cache_ = solve_omega_pairing(t);
  }
  return *u_cache_;
}

}  // namespace invconn
