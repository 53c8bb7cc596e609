#pragma once

// Rational polyhedral decompositions in V-representation: cones over cells,
// asymptotic fans, goodness validation, rescaling, and the planar overlay.

#include <cstddef>
#include <string>
#include <vector>

#include "tropcount/incidence.hpp"
#include "tropcount/tropical_core.hpp"

namespace tropcount {

struct Polyhedron {
  std::vector<RatVector> vertices;
  std::vector<LatticeVector> rays;  // primitive recession generators
  std::size_t dim = 0;
};

struct PolyhedralDecomposition {
  std::size_t n = 2;
  std::vector<Polyhedron> cells;
  /// facets[i]: ids of the codimension-one faces of cell i.
  std::vector<std::vector<int>> facets;

  std::vector<int> cells_of_dim(std::size_t d) const;
};

struct Cone {
  std::vector<LatticeVector> generators;  // primitive, sorted
  std::size_t dim = 0;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend bool operator<(const Cone& a, const Cone& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.generators < b.generators;
  }
};

struct Fan {
  std::vector<Cone> cones;  // sorted, distinct

  std::vector<LatticeVector> rays() const;  // generators of 1-dimensional pointed cones
};

/// Primitive, deduplicated and sorted generators; in the plane also reduced to
/// a canonical generating set.
Cone make_cone(std::vector<RatVector> generators, std::size_t ambient);

/// Closure of the cone over cell × {1} in Q^{n+1}.
Cone cone_over(const Polyhedron& cell);
Fan asymptotic_fan(const PolyhedralDecomposition& p);

struct GoodnessViolation {
  int clause;  // 1, 2 or 3
  int curve;
  int edge;        // -1 when not tied to an edge
  int vertex;      // -1 when not tied to a vertex
  int constraint;  // -1 when not tied to a constraint
  std::string detail;
};

struct GoodnessReport {
  std::vector<GoodnessViolation> violations;
  /// Informational: 0-cells with non-integral coordinates.
  std::size_t non_integral_zero_cells = 0;

  bool ok() const { return violations.empty(); }
};

GoodnessReport validate_good(const PolyhedralDecomposition& p, const std::vector<TropicalCurve>& curves,
                             const std::vector<AffineConstraint>& constraints);

/// Least s > 0 making positions and base points integral and every bounded
/// lattice length a multiple of its weight.
Integer rescale_for_goodness(const std::vector<TropicalCurve>& curves,
                             const std::vector<AffineConstraint>& constraints);

/// Planar overlay of all curve images and constraint lines, with constraint
/// points on curves as extra vertices. Throws NonGenericInput when two pieces
/// overlap along a segment.
PolyhedralDecomposition build_decomposition_2d(const std::vector<TropicalCurve>& curves,
                                               const std::vector<AffineConstraint>& constraints);

}  // namespace tropcount
