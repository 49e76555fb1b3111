#ifndef INVCONN_REDUCTIVE_HPP
#define INVCONN_REDUCTIVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "invconn/lie_algebra.hpp"

namespace invconn {

struct ReductiveReport {
  bool h_closed_ok = true;      // [h, h] subset of h
  bool reductivity_ok = true;   // [h, m] subset of m
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;  // g-basis indices
  bool ok() const { return h_closed_ok && reductivity_ok; }
};

struct SymplecticReport {
  bool skew_ok = true;
  bool nondegenerate_ok = true;
  bool cocycle_ok = true;
  bool inf_invariant_ok = true;
  std::optional<bool> autos_ok;  // set only when automorphisms were supplied
  bool ok() const {
    return skew_ok && nondegenerate_ok && cocycle_ok && inf_invariant_ok &&
           autos_ok.value_or(true);
  }
};

/// Basis-adapted reductive splitting g = h + m of a validated algebra.
class ReductiveSpace {
 public:
  ReductiveSpace(LieAlgebra alg, std::vector<std::size_t> h_idx, std::vector<std::size_t> m_idx);

  const LieAlgebra& algebra() const { return alg_; }
  const std::vector<std::size_t>& h_indices() const { return h_idx_; }
  const std::vector<std::size_t>& m_indices() const { return m_idx_; }
  std::size_t k() const { return m_idx_.size(); }  // dim m
  std::size_t h_dim() const { return h_idx_.size(); }

  ReductiveReport check_reductive() const;

  /// x = x_h + x_m with supports in h / m (both as g-basis vectors).
  std::pair<Vec, Vec> split(const Vec& x) const;

  /// m-coordinates of a g-vector supported on m (the m-projection).
  Vec project_m(const Vec& x_g) const;
  /// h-coordinates of a g-vector supported on h (the h-projection).
  Vec project_h_coords(const Vec& x_g) const;
  /// Embeds an m-coordinate vector back into g.
  Vec embed_m(const Vec& x_m) const;

  /// [x, y]_m, inputs and output in m-coordinates.
  Vec bracket_m(const Vec& x, const Vec& y) const;
  /// Cached [e_i, e_j]_m on the m-basis.
  const Vec& bracket_m_basis(std::size_t i, std::size_t j) const;
  /// Cached h-part of [e_i, e_j] as a g-vector.
  const Vec& bracket_h_basis(std::size_t i, std::size_t j) const;

  /// Matrix of y -> [x, y]_m on m; x given in m-coordinates.
  Mat l10(const Vec& x) const;
  const Mat& l10_basis(std::size_t i) const;

  /// Matrix on m of y -> [v, y] for a g-vector v with [v, m] in m
  /// (h-vectors and, when m is an ideal, m-vectors).
  Mat ad_m(const Vec& v_g) const;

  bool is_locally_symmetric() const;
  bool isotropy_faithful() const;

 private:
  void build_caches();

  LieAlgebra alg_;
  std::vector<std::size_t> h_idx_, m_idx_;
  std::vector<std::size_t> m_pos_;  // g-index -> position in m_idx_, or npos
  std::vector<Vec> bm_;             // [e_i,e_j]_m table (m-coords), k*k
  std::vector<Vec> bh_;             // h-part table (g-coords), k*k
  std::vector<Mat> l10_;            // L^{1,0}_{e_i} matrices
};

/// Reductive space together with an invariant symplectic tensor on m.
///
/// validate() must pass before the connection machinery is used;
/// require_validated() guards every downstream entry point.
class SymplecticSpace {
 public:
  SymplecticSpace(ReductiveSpace space, Mat omega);

  const ReductiveSpace& space() const { return space_; }
  std::size_t k() const { return space_.k(); }
  const Mat& omega_matrix() const { return omega_; }

  SymplecticReport validate(const std::vector<Mat>* autos = nullptr);
  bool validated() const { return validated_; }
  void require_validated() const;

  /// omega evaluated on m-coordinate vectors.
  Rational omega(const Vec& x, const Vec& y) const;

  /// Adjoint with respect to omega: omega(adj(F) x, y) = omega(x, F y).
  Mat omega_adjoint(const Mat& f) const;

  /// The unique u in m with omega(u, x) = tr(L^{1,0}_x); m-coordinates.
  Vec u_vector() const;

  /// Solves omega(v, e_l) = rhs[l] for v (m-coordinates).
  Vec solve_omega_pairing(const std::vector<Rational>& rhs) const;

  const Mat& omega_inverse() const;

 private:
  ReductiveSpace space_;
  Mat omega_;
  Mat omega_inv_;  // filled on first use after validation
  bool validated_ = false;
  mutable std::optional<Vec> u_cache_;
};

}  // namespace invconn

#endif
