#ifndef INVCONN_COMPACT_HPP
#define INVCONN_COMPACT_HPP

#include "invconn/connection.hpp"

namespace invconn {

/// Ad-invariant inner-product data restricted to m.
struct Metric {
  Mat G;  // k x k, symmetric
};

struct MetricReport {
  bool symmetric_ok = true;
  bool nondegenerate_ok = true;
  bool ad_invariant_ok = true;  // <[x,y]_m, z> + <y, [x,z]_m> = 0 on m
  bool h_invariant_ok = true;   // <[f,x], y> + <x, [f,y]> = 0 for h-basis f
  bool ok() const {
    return symmetric_ok && nondegenerate_ok && ad_invariant_ok && h_invariant_ok;
  }
};

struct WPropertyReport {
  bool g_skew = false;                 // <Wx,y> = -<x,Wy>
  bool commutes_with_isotropy = false; // [W, ad^m_f] = 0 for h-basis f
  bool bracket_rule = false;           // [W, L^{1,0}_x] = L^{1,0}_{W x}
  bool conjugates_l01 = false;         // L^{0,1}_x = W^{-1} L^{1,0}_x W
  bool conjugates_d = false;           // D*_{x,y} = W^{-1} D_{y,x} W
  bool all() const {
    return g_skew && commutes_with_isotropy && bracket_rule && conjugates_l01 && conjugates_d;
  }
};

struct WParallelReport {
  bool is_parallel = false;
  std::optional<std::size_t> witness;  // first m-basis index with [L^s_{e_i}, W] != 0
};

MetricReport validate_metric(const SymplecticSpace& s, const Metric& g);

/// G = c * (Killing form restricted to m). Requires the result to be
/// positive definite (checked by exact leading principal minors);
/// throws NotPositiveDefiniteError otherwise.
Metric metric_from_killing(const SymplecticSpace& s, const Rational& c);

/// The unique W with omega(x, y) = <W x, y> for all x, y.
Mat w_operator(const SymplecticSpace& s, const Metric& g);

WPropertyReport w_property_report(const SymplecticSpace& s, const Metric& g);

/// Compact trace formula for ric^{0,1}; equals the generic Ricci exactly.
Mat ricci_zero_one_compact(const SymplecticSpace& s, const Metric& g);

/// Compact trace formula for ric^s; equals the generic Ricci exactly.
Mat ricci_natural_compact(const SymplecticSpace& s, const Metric& g);

/// Parallelism defect [L^s_{e_i}, W] of the W tensor under nabla^s.
WParallelReport w_parallel_defect(const SymplecticSpace& s, const Metric& g);

}  // namespace invconn

#endif
