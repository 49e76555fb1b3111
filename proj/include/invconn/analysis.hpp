#ifndef INVCONN_ANALYSIS_HPP
#define INVCONN_ANALYSIS_HPP

#include "invconn/connection.hpp"

namespace invconn {

struct ClassificationReport {
  Rational a, b;
  // Flags computed from the actual tensors.
  bool preserves_omega = false;
  bool torsion_free = false;
  bool symplectic = false;
  bool flat = false;
  bool ricci_flat = false;
  // Closed-form predictions (a = b, a = (1-b)/2) carried for cross-checking.
  bool predicted_preserves_omega = false;
  bool predicted_torsion_free = false;
};

struct FlatnessReport {
  bool bracket_criterion = false;  // [[m,m]_h, m] = {0}
  bool k01_zero = false;
  bool m_is_ideal = false;
  bool isotropy_faithful = false;
};

struct DoublyFlatReport {
  bool flat01 = false;
  bool flatS = false;
  bool m_nilpotent = false;
  bool implication_ok = true;  // flat01 && flatS => m_nilpotent
};

/// Tensor-computed classification of the (a,b) connection. Throws
/// LocallySymmetricError on locally symmetric input (the closed-form
/// characterizations are undefined there). A disagreement between the
/// computed flags and the predictions is an InternalCheckError.
ClassificationReport classify(const SymplecticSpace& s, const Rational& a, const Rational& b);

/// Flatness criteria for the Zero-One connection. The bracket criterion
/// and K^{0,1} = 0 must agree, and with faithful isotropy both must
/// agree with m being an ideal; a mismatch is an InternalCheckError.
FlatnessReport flatness_report(const SymplecticSpace& s);

/// (nabla_x ric)(y,z) = -ric(L_x y, z) - ric(y, L_x z) over basis triples.
TriTable cov_ricci(const SymplecticSpace& s, const ProductTable& prod, const Mat& ric);

bool is_ricci_parallel(const SymplecticSpace& s, const ProductTable& prod, const Mat& ric);

/// Cyclic sum of the covariant derivative vanishes.
bool is_preferred(const SymplecticSpace& s, const ProductTable& prod, const Mat& ric);

/// ric^s via Killing form and u-vector; only valid when h is empty.
/// Throws NotLieGroupCaseError otherwise.
Mat lie_group_ricci(const SymplecticSpace& s);

DoublyFlatReport doubly_flat_nilpotency_check(const SymplecticSpace& s);

}  // namespace invconn

#endif
