#include "invconn/analysis.hpp"

namespace invconn {

namespace {

const Rational kThird(1, 3);

// Lower central series of (m, [.,.]_m) reaches zero. Works directly on
// spans, so it does not require the m-bracket to satisfy Jacobi.
bool m_bracket_nilpotent(const ReductiveSpace& sp) {
  const std::size_t k = sp.k();
  std::vector<std::vector<Rational>> whole;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> e(k);
    e[i] = Rational(1);
    whole.push_back(std::move(e));
  }
  auto current = whole;
  std::size_t last = k;
  while (true) {
    std::vector<std::vector<Rational>> products;
    for (const auto& x : whole)
      for (const auto& y : current) {
        const Vec v = sp.bracket_m(Vec(x, Basis::m), Vec(y, Basis::m));
        if (!v.is_zero()) products.push_back(v.c);
      }
    auto next = span_basis(products);
    if (next.size() == last) return false;  // stabilized above zero
    if (next.empty()) return true;
    last = next.size();
    current = std::move(next);
  }
}

}  // namespace

ClassificationReport classify(const SymplecticSpace& s, const Rational& a, const Rational& b) {
  s.require_validated();
  if (s.space().is_locally_symmetric())
    throw LocallySymmetricError(
        "classification per the (a,b) family is undefined on locally symmetric input: "
        "every product is zero and the connection is the canonical symplectic one");
  ClassificationReport rep;
  rep.a = a;
  rep.b = b;
  const ProductTable prod = nomizu_product(s, {a, b});
  rep.preserves_omega = n_tensor(s, prod).is_zero();
  rep.torsion_free = torsion(s, prod).is_zero();
  rep.symplectic = rep.preserves_omega && rep.torsion_free;
  const CurvatureTensor curv = curvature(s, prod);
  rep.flat = curv.is_zero();
  rep.ricci_flat = ricci_contract(curv).is_zero();
  rep.predicted_preserves_omega = (a == b);
  rep.predicted_torsion_free = (a == (Rational(1) - b) / Rational(2));
  if (rep.preserves_omega != rep.predicted_preserves_omega ||
      rep.torsion_free != rep.predicted_torsion_free)
    throw InternalCheckError("tensor-computed flags disagree with the (a,b) predictions");
  return rep;
}

FlatnessReport flatness_report(const SymplecticSpace& s) {
  s.require_validated();
  const auto& sp = s.space();
  const auto& alg = sp.algebra();
  const std::size_t k = sp.k();
  FlatnessReport rep;

  // [[m,m]_h, m] = {0}
  rep.bracket_criterion = true;
  for (std::size_t i = 0; i < k && rep.bracket_criterion; ++i)
    for (std::size_t j = i + 1; j < k && rep.bracket_criterion; ++j) {
      const Vec& h_part = sp.bracket_h_basis(i, j);
      if (h_part.is_zero()) continue;
      for (std::size_t l = 0; l < k; ++l) {
        const Vec eg = sp.embed_m(Vec::unit(k, l, Basis::m));
        if (!alg.bracket(h_part, eg).is_zero()) {
          rep.bracket_criterion = false;
          break;
        }
      }
    }

  rep.k01_zero = curvature_zero_one_closed(s).is_zero();

  rep.m_is_ideal = true;
  for (std::size_t i = 0; i < k && rep.m_is_ideal; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!sp.bracket_h_basis(i, j).is_zero()) {
        rep.m_is_ideal = false;
        break;
      }
    }

  rep.isotropy_faithful = sp.isotropy_faithful();

  if (rep.bracket_criterion != rep.k01_zero)
    throw InternalCheckError("bracket flatness criterion disagrees with K^{0,1}");
  if (rep.isotropy_faithful && rep.k01_zero != rep.m_is_ideal)
    throw InternalCheckError("with faithful isotropy, flatness must match m being an ideal");
  return rep;
}

TriTable cov_ricci(const SymplecticSpace& s, const ProductTable& prod, const Mat& ric) {
  s.require_validated();
  const std::size_t k = s.k();
  if (ric.rows() != k || ric.cols() != k)
    throw SizeMismatchError("ricci form has the wrong size");
  auto pair = [&](const Vec& x, std::size_t j) {
    Rational t;
    for (std::size_t r = 0; r < k; ++r)
      if (!x[r].is_zero()) t += x[r] * ric(r, j);
    return t;
  };
  TriTable c(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat& li = prod.L[i];
    for (std::size_t j = 0; j < k; ++j) {
      const Vec lij(li.col(j), Basis::m);
      for (std::size_t l = 0; l < k; ++l) {
        const Vec lil(li.col(l), Basis::m);
        // -ric(L_x y, z) - ric(y, L_x z); second term via symmetry of indices
        Rational t = -pair(lij, l);
        for (std::size_t r = 0; r < k; ++r)
          if (!lil[r].is_zero()) t -= ric(j, r) * lil[r];
        c.at(i, j, l) = t;
      }
    }
  }
  return c;
}

bool is_ricci_parallel(const SymplecticSpace& s, const ProductTable& prod, const Mat& ric) {
  return cov_ricci(s, prod, ric).is_zero();
}

bool is_preferred(const SymplecticSpace& s, const ProductTable& prod, const Mat& ric) {
  const TriTable c = cov_ricci(s, prod, ric);
  const std::size_t k = c.k();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        // (nabla_X ric)(Y,Z) + (nabla_Z ric)(X,Y) + (nabla_Y ric)(Z,X)
        Rational t = c.at(i, j, l);
        t += c.at(l, i, j);
        t += c.at(j, l, i);
        if (!t.is_zero()) return false;
      }
  return true;
}

Mat lie_group_ricci(const SymplecticSpace& s) {
  s.require_validated();
  const auto& sp = s.space();
  if (sp.h_dim() != 0)
    throw NotLieGroupCaseError("lie_group_ricci requires an empty isotropy algebra");
  const std::size_t k = sp.k();
  const Mat kappa = sp.algebra().killing_form();
  const Mat ad_u = sp.l10(s.u_vector());
  const Rational ninth(1, 9);
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational v = kappa(i, j);
      v += s.omega(Vec::unit(k, i, Basis::m), Vec(ad_u.col(j), Basis::m));
      r(i, j) = ninth * v;
    }
  return r;
}

DoublyFlatReport doubly_flat_nilpotency_check(const SymplecticSpace& s) {
  s.require_validated();
  DoublyFlatReport rep;
  rep.flat01 = curvature_zero_one_closed(s).is_zero();
  rep.flatS = curvature(s, nomizu_product(s, {kThird, kThird})).is_zero();
  rep.m_nilpotent = m_bracket_nilpotent(s.space());
  rep.implication_ok = !(rep.flat01 && rep.flatS) || rep.m_nilpotent;
  if (!rep.implication_ok)
    throw InternalCheckError("doubly flat input with non-nilpotent m-bracket");
  return rep;
}

}  // namespace invconn
