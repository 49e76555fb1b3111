#include "invconn/compact.hpp"

namespace invconn {

namespace {

void require_valid_metric(const SymplecticSpace& s, const Metric& g) {
  const MetricReport rep = validate_metric(s, g);
  if (!rep.ok()) throw Error("metric fails the ad-invariance/nondegeneracy checks");
}

}  // namespace

MetricReport validate_metric(const SymplecticSpace& s, const Metric& g) {
  s.require_validated();
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  MetricReport rep;
  if (g.G.rows() != k || g.G.cols() != k)
    throw SizeMismatchError("metric must be k x k over the m-basis");

  rep.symmetric_ok = g.G == g.G.transpose();
  rep.nondegenerate_ok = rank(g.G) == k;

  // <[x,y]_m, z> + <y, [x,z]_m> = 0, i.e. L10_x^T G + G L10_x = 0.
  for (std::size_t i = 0; i < k && rep.ad_invariant_ok; ++i) {
    const Mat& li = sp.l10_basis(i);
    if (!(li.transpose() * g.G + g.G * li).is_zero()) rep.ad_invariant_ok = false;
  }

  for (auto hi : sp.h_indices()) {
    const Mat adh = sp.ad_m(Vec::unit(sp.algebra().dim(), hi, Basis::g));
    if (!(adh.transpose() * g.G + g.G * adh).is_zero()) {
      rep.h_invariant_ok = false;
      break;
    }
  }
  return rep;
}

Metric metric_from_killing(const SymplecticSpace& s, const Rational& c) {
  s.require_validated();
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const Mat kappa = sp.algebra().killing_form();
  Mat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      g(i, j) = c * kappa(sp.m_indices()[i], sp.m_indices()[j]);
  // Sylvester: every leading principal minor must be positive.
  for (std::size_t t = 1; t <= k; ++t) {
    Mat minor(t, t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) minor(i, j) = g(i, j);
    if (!(det(minor) > Rational(0)))
      throw NotPositiveDefiniteError("scaled Killing form is not positive definite on m");
  }
  return Metric{std::move(g)};
}

Mat w_operator(const SymplecticSpace& s, const Metric& g) {
  require_valid_metric(s, g);
  // <W e_i, e_j> = Omega[i][j] for all pairs reads G W = Omega^T = -Omega.
  const std::size_t k = s.k();
  const Mat rhs = -s.omega_matrix();
  Mat w(k, k);
  for (std::size_t j = 0; j < k; ++j) w.set_col(j, solve(g.G, rhs.col(j)));
  return w;
}

WPropertyReport w_property_report(const SymplecticSpace& s, const Metric& g) {
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const Mat w = w_operator(s, g);
  const Mat w_inv = inverse(w);
  WPropertyReport rep;

  rep.g_skew = (w.transpose() * g.G + g.G * w).is_zero();

  rep.commutes_with_isotropy = true;
  for (auto hi : sp.h_indices()) {
    const Mat adh = sp.ad_m(Vec::unit(sp.algebra().dim(), hi, Basis::g));
    if (!commutator(w, adh).is_zero()) {
      rep.commutes_with_isotropy = false;
      break;
    }
  }

  rep.bracket_rule = true;
  for (std::size_t i = 0; i < k; ++i) {
    const Mat lhs = commutator(w, sp.l10_basis(i));
    const Mat rhs = sp.l10(Vec(w.col(i), Basis::m));
    if (lhs != rhs) {
      rep.bracket_rule = false;
      break;
    }
  }

  const ProductTable l01 = nomizu_product(s, {Rational(0), Rational(1)});
  rep.conjugates_l01 = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (l01.L[i] != w_inv * sp.l10_basis(i) * w) {
      rep.conjugates_l01 = false;
      break;
    }
  }

  rep.conjugates_d = true;
  for (std::size_t i = 0; i < k && rep.conjugates_d; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Mat lhs = s.omega_adjoint(d_endo_basis(s, i, j));
      const Mat rhs = w_inv * d_endo_basis(s, j, i) * w;
      if (lhs != rhs) {
        rep.conjugates_d = false;
        break;
      }
    }
  return rep;
}

Mat ricci_zero_one_compact(const SymplecticSpace& s, const Metric& g) {
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const Mat w = w_operator(s, g);
  const Mat w_inv = inverse(w);
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& li = sp.l10_basis(i);
    for (std::size_t j = 0; j < k; ++j) {
      const Mat l_wj = sp.l10(Vec(w.col(j), Basis::m));
      r(i, j) = Rational(2) * trace(li * w_inv * l_wj) - trace(d_endo_basis(s, i, j));
    }
  }
  return r;
}

Mat ricci_natural_compact(const SymplecticSpace& s, const Metric& g) {
  const auto& sp = s.space();
  const std::size_t k = sp.k();
  const Mat w = w_operator(s, g);
  const Mat w_inv = inverse(w);
  const Rational ninth(1, 9), four_ninths(4, 9);
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& li = sp.l10_basis(i);
    for (std::size_t j = 0; j < k; ++j) {
      const Mat l_wj = sp.l10(Vec(w.col(j), Basis::m));
      Rational v = ninth * trace(li * sp.l10_basis(j));
      v += four_ninths * trace(li * w_inv * l_wj);
      v -= trace(d_endo_basis(s, i, j));
      r(i, j) = v;
    }
  }
  return r;
}

WParallelReport w_parallel_defect(const SymplecticSpace& s, const Metric& g) {
  const std::size_t k = s.k();
  const Mat w = w_operator(s, g);
  const ProductTable ls = nomizu_product(s, {Rational(1, 3), Rational(1, 3)});
  WParallelReport rep;
  rep.is_parallel = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!commutator(ls.L[i], w).is_zero()) {
      rep.is_parallel = false;
      rep.witness = i;
      break;
    }
  }
  if (!s.space().is_locally_symmetric() && rep.is_parallel)
    throw InternalCheckError("W parallel on non-locally-symmetric compact input");
  return rep;
}

}  // namespace invconn
