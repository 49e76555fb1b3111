#include "invconn/lie_algebra.hpp"

#include <algorithm>

namespace invconn {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// Span of [span_a, span_b] under a bracket on coefficient vectors.
std::vector<std::vector<Rational>> bracket_span(
    const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b,
    const LieAlgebra& alg) {
  std::vector<std::vector<Rational>> products;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto v = alg.bracket(Vec(x, Basis::g), Vec(y, Basis::g));
      if (!v.is_zero()) products.push_back(v.c);
    }
  return span_basis(products);
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), table_(dim * dim, std::vector<Rational>(dim)) {
  if (names_.size() != dim_) throw SizeMismatchError("basis name count differs from dim");
}

void LieAlgebra::check_g_vec(const Vec& v) const {
  if (v.basis != Basis::g) throw BasisMismatchError("expected a g-basis vector");
  if (v.size() != dim_) throw SizeMismatchError("vector length differs from dim");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= j) throw Error("set_bracket requires i < j");
  check_g_vec(v);
  table_[i * dim_ + j] = v.c;
  auto neg = v.c;
  for (auto& x : neg) x = -x;
  table_[j * dim_ + i] = std::move(neg);
  validated_ = false;
}

void LieAlgebra::set_bracket_raw(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= dim_ || j >= dim_) throw SizeMismatchError("bracket index out of range");
  check_g_vec(v);
  table_[i * dim_ + j] = v.c;
  validated_ = false;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return Vec(table_[i * dim_ + j], Basis::g);
}

StructureReport LieAlgebra::validate() {
  StructureReport rep;
  for (std::size_t i = 0; i < dim_ && rep.antisymmetry_ok; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      std::vector<Rational> sum = table_[i * dim_ + j];
      for (std::size_t l = 0; l < dim_; ++l) sum[l] += table_[j * dim_ + i][l];
      if (!all_zero(sum)) {
        rep.antisymmetry_ok = false;
        rep.first_violation = std::vector<std::size_t>{i, j};
        break;
      }
    }
  }
  if (rep.antisymmetry_ok) {
    for (std::size_t i = 0; i < dim_ && rep.jacobi_ok; ++i)
      for (std::size_t j = i + 1; j < dim_ && rep.jacobi_ok; ++j)
        for (std::size_t l = j + 1; l < dim_; ++l) {
          // [e_i,[e_j,e_l]] + [e_l,[e_i,e_j]] + [e_j,[e_l,e_i]]
          std::vector<Rational> sum(dim_);
          const auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
            const auto& inner = table_[b * dim_ + c];
            for (std::size_t t = 0; t < dim_; ++t) {
              if (inner[t].is_zero()) continue;
              const auto& outer = table_[a * dim_ + t];
              for (std::size_t s = 0; s < dim_; ++s) sum[s] += inner[t] * outer[s];
            }
          };
          add_term(i, j, l);
          add_term(l, i, j);
          add_term(j, l, i);
          if (!all_zero(sum)) {
            rep.jacobi_ok = false;
            rep.first_violation = std::vector<std::size_t>{i, j, l};
          }
        }
  }
  validated_ = rep.ok();
  return rep;
}

void LieAlgebra::require_validated() const {
  if (!validated_) throw NotValidatedError("Lie algebra used before successful validate()");
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  check_g_vec(x);
  check_g_vec(y);
  Vec r(dim_, Basis::g);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational f = x[i] * y[j];
      const auto& cij = table_[i * dim_ + j];
      for (std::size_t l = 0; l < dim_; ++l) r[l] += f * cij[l];
    }
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
  require_validated();
  check_g_vec(x);
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vec column = bracket(x, Vec::unit(dim_, j, Basis::g));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = column[i];
  }
  return m;
}

Mat LieAlgebra::ad_basis(std::size_t i) const {
  return ad(Vec::unit(dim_, i, Basis::g));
}

Mat LieAlgebra::killing_form() const {
  require_validated();
  std::vector<Mat> ads;
  ads.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
  Mat k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      k(i, j) = trace(ads[i] * ads[j]);
      k(j, i) = k(i, j);
    }
  return k;
}

UnimodularityReport LieAlgebra::unimodularity() const {
  require_validated();
  UnimodularityReport rep;
  rep.trace_vector = Vec(dim_, Basis::g);
  for (std::size_t i = 0; i < dim_; ++i) {
    rep.trace_vector[i] = trace(ad_basis(i));
    if (!rep.trace_vector[i].is_zero()) rep.is_unimodular = false;
  }
  return rep;
}

SeriesProfile LieAlgebra::series_profile() const {
  require_validated();
  SeriesProfile p;

  std::vector<std::vector<Rational>> whole;
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<Rational> e(dim_);
    e[i] = Rational(1);
    whole.push_back(std::move(e));
  }

  // Lower central series: C^1 = g, C^{n+1} = [g, C^n].
  p.lower_central.push_back(dim_);
  auto current = whole;
  while (true) {
    auto next = bracket_span(whole, current, *this);
    const std::size_t d = next.size();
    if (d == p.lower_central.back()) break;  // stabilized
    p.lower_central.push_back(d);
    current = std::move(next);
    if (d == 0) break;
  }
  p.is_nilpotent = p.lower_central.back() == 0;
  if (p.is_nilpotent) p.nilpotency_step = p.lower_central.size() - 1;

  // Derived series: D^0 = g, D^{n+1} = [D^n, D^n].
  p.derived.push_back(dim_);
  current = whole;
  while (true) {
    auto next = bracket_span(current, current, *this);
    const std::size_t d = next.size();
    if (d == p.derived.back()) break;
    p.derived.push_back(d);
    current = std::move(next);
    if (d == 0) break;
  }
  p.is_solvable = p.derived.back() == 0;

  // Center: common kernel of all ad(e_j), i.e. sum_i x_i ad(e_i) = 0.
  Mat stacked(dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Mat adi = ad_basis(i);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) stacked(r * dim_ + c, i) = adi(r, c);
  }
  for (auto& v : null_space(stacked)) p.center.push_back(Vec(std::move(v), Basis::g));
  return p;
}

}  // namespace invconn
