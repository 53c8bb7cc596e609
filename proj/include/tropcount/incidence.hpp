#pragma once

// Affine constraints, marked-edge matching, the lattice map T_h with its
// per-constraint inclusions, and sign classes of real point data.

#include <cstddef>
#include <vector>

#include "tropcount/exact_lattice.hpp"
#include "tropcount/tropical_core.hpp"

namespace tropcount {

struct AffineConstraint {
  RatVector base;
  /// Columns span L(A) ∩ M; always saturated.
  lattice::IntMatrix directions;
  std::size_t codim = 0;

  std::size_t dimension() const { return base.size() - codim; }

  static AffineConstraint point(RatVector p);
  /// Saturates the given direction generators.
  static AffineConstraint make(RatVector base, const lattice::IntMatrix& directions);
};

struct RealPointConfig {
  /// signs[j][k] ∈ {+1, -1}: sign of coordinate k of the real point P_j.
  std::vector<std::vector<int>> signs;

  static RealPointConfig all_positive(std::size_t count, std::size_t n);
};

/// Dimension count plus the translation test; see the README for the clauses
/// that are only checked after enumeration.
bool check_generality_dims(std::int64_t genus, const Degree& degree,
                           const std::vector<AffineConstraint>& constraints, std::size_t n);

bool point_in_constraint(const RatVector& p, const AffineConstraint& a);

struct EdgeMeet {
  enum class Kind { None, Point, Whole } kind;
  RatVector point;
};
/// Intersection of the open edge image with A; Whole when the edge lies in A.
EdgeMeet edge_meets_constraint(const TropicalCurve& c, int edge, const AffineConstraint& a);

/// Edge id meeting each constraint. Throws ConstraintOnVertex,
/// ConstraintMissed, or NonGenericInput when a constraint meets several edges.
std::vector<int> match_marked_edges(const TropicalCurve& c, const std::vector<AffineConstraint>& constraints);

/// The ∂⁻ vertex of an edge: its only vertex when unbounded, otherwise the
/// endpoint with lexicographically smaller position.
int minus_vertex(const TropicalCurve& c, int edge);
/// Primitive direction of the edge pointing away from minus_vertex.
LatticeVector direction_from_minus(const TropicalCurve& c, int edge);

struct ThRowLabel {
  enum class Kind { Edge, Constraint } kind;
  int index;  // edge id or constraint index
  int coordinate;
};

struct ThColLabel {
  int vertex;
  int coordinate;
};

struct LatticeMapTh {
  lattice::IntMatrix matrix;
  std::vector<ThRowLabel> row_labels;
  std::vector<ThColLabel> col_labels;
  /// Bounded edges in block order, with their (∂⁻, ∂⁺) vertices.
  std::vector<int> edge_ids;
  std::vector<std::pair<int, int>> orientation;
  std::vector<lattice::QuotientBasis> edge_bases;
  /// Per constraint: ∂⁻E_j and the quotient by saturate(Zu + L(A_j)).
  std::vector<int> constraint_vertex;
  std::vector<lattice::QuotientBasis> constraint_bases;

  bool square() const { return matrix.rows() == matrix.cols(); }
};

/// `marks[j]` is the edge carrying constraint j. Rows follow the bounded edges
/// in id order, then the constraints.
LatticeMapTh build_T_h(const TropicalCurve& c, const std::vector<AffineConstraint>& constraints,
                       const std::vector<int>& marks);

/// The inclusion Zu + (L(A_j) ∩ M) ⊂ saturate(Zu + L(A_j)), written in a basis
/// of the target. Square whenever u ∉ L(A_j).
lattice::IntMatrix build_constraint_inclusion(const LatticeVector& u, const AffineConstraint& a);

struct SignClass {
  lattice::BitVector bits;
};

/// σ in the row coordinates of `t`: zero on edge blocks, and on constraint
/// block j the projection mod 2 of the sign exponents of s_j · sign_t^{a_j}.
/// Throws NonIntegralBase for a non-integral base point.
SignClass sigma_sign_class(const LatticeMapTh& t, const std::vector<AffineConstraint>& constraints,
                           const RealPointConfig& config, int sign_t);

AffineConstraint scaled(const AffineConstraint& a, const Rational& s);

}  // namespace tropcount
