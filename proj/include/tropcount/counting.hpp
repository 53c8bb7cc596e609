#pragma once

// Lattice indices and the aggregate counts N-trop and N^R-trop.

#include <optional>
#include <vector>

#include "tropcount/incidence.hpp"

namespace tropcount {

struct IndexBundle {
  Integer complex_index = 1;  // Π invariant factors
  Integer real_index = 1;     // 2^{#even factors}
  std::optional<Integer> twisted_real;
  std::vector<Integer> factors;
};

/// Throws InfiniteCokernel unless m is square and nonsingular.
IndexBundle real_index(const lattice::IntMatrix& m);
IndexBundle twisted_real_index(const LatticeMapTh& t, const SignClass& sigma);

/// Index bundle of the inclusion for one marked edge.
IndexBundle constraint_index(const TropicalCurve& c, const AffineConstraint& a, int marked_edge);

/// Π_bounded w^R(E) · Π_j w(E_j), w^R(E) = 2 for even weight and 1 otherwise.
Integer total_real_weight(const TropicalCurve& c);
/// Π_bounded w(E) · Π_j w(E_j).
Integer total_complex_weight(const TropicalCurve& c);

struct CountRow {
  std::size_t curve_id = 0;
  IndexBundle th;
  // complex side
  Integer complex_weight;
  Integer constraint_index = 1;  // Π index(A_j)
  Integer complex_contribution;
  Integer vertex_product;  // Π_V Mult(V), planar curves only
  // real side (set by count_real)
  Integer real_weight;
  Integer constraint_real_index = 1;  // Π D^R(A_j)
  Integer real_contribution;
};

struct CountReport {
  std::vector<CountRow> rows;
  bool has_real = false;
  Integer n_complex = 0;
  Integer n_real = 0;
  /// Σ_h Mult_R(h) over the same curves (planar only).
  Integer welschinger = 0;
  int sign_t = 1;

  bool parity_ok() const;
};

/// Curves must carry their marks in graph.marked.
CountReport count_complex(const std::vector<TropicalCurve>& curves,
                          const std::vector<AffineConstraint>& constraints);
/// Base points must be integral (rescale first).
CountReport count_real(const std::vector<TropicalCurve>& curves,
                       const std::vector<AffineConstraint>& constraints, const RealPointConfig& config,
                       int sign_t);

}  // namespace tropcount
