#ifndef INVCONN_LIE_ALGEBRA_HPP
#define INVCONN_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "invconn/linalg.hpp"

namespace invconn {

struct StructureReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  /// First violating basis pair/triple, if any (indices into the basis).
  std::optional<std::vector<std::size_t>> first_violation;
  bool ok() const { return antisymmetry_ok && jacobi_ok; }
};

struct UnimodularityReport {
  bool is_unimodular = true;
  Vec trace_vector;  // trace_vector[i] = tr(ad e_i)
};

struct SeriesProfile {
  std::vector<std::size_t> lower_central;  // dims g, [g,g], [g,[g,g]], ... until stable
  std::vector<std::size_t> derived;        // dims g, [g,g], [[g,g],[g,g]], ...
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::vector<Vec> center;  // basis of {x : [x,y] = 0 for all y}
  /// Number of steps until the lower central series vanishes (0 for abelian input
  /// of dimension 0; meaningful only when is_nilpotent).
  std::size_t nilpotency_step = 0;
};

/// Lie algebra given by structure constants on a named basis.
///
/// Freshly constructed objects are unvalidated; validate() must pass
/// before any other operation is used. set_bracket mirrors i<j entries
/// so antisymmetry holds by construction; set_bracket_raw writes a
/// single (i, j) slot and exists for ingesting untrusted tables.
class LieAlgebra {
 public:
  LieAlgebra(std::size_t dim, std::vector<std::string> basis_names);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool validated() const { return validated_; }

  /// Sets [e_i, e_j] = v (requires i < j); the mirrored entry is implied.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);

  /// Writes one directed slot without mirroring. Leaves the table
  /// possibly non-antisymmetric; validate() will report that.
  void set_bracket_raw(std::size_t i, std::size_t j, const Vec& v);

  StructureReport validate();

  /// Structure-constant vector [e_i, e_j] (g-basis).
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the table. Requires validated(), g-basis inputs.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of y -> [x, y] on the g-basis. Requires validated().
  Mat ad(const Vec& x) const;
  Mat ad_basis(std::size_t i) const;

  /// K[i][j] = tr(ad e_i . ad e_j). Requires validated().
  Mat killing_form() const;

  UnimodularityReport unimodularity() const;

  SeriesProfile series_profile() const;

 private:
  void require_validated() const;
  void check_g_vec(const Vec& v) const;

  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> table_;  // dense dim*dim of coefficient vectors
  bool validated_ = false;
};

}  // namespace invconn

#endif
