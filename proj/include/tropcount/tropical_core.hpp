#pragma once

// Parameterized tropical curves: graph data, balancing, degree, genus,
// deformation dimension and the local multiplicities of trivalent vertices.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropcount/types.hpp"

namespace tropcount {

/// One edge of Γ. Unbounded edges have head == -1 and carry their outward
/// primitive direction; bounded edges carry the primitive direction tail→head.
struct Edge {
  int tail = 0;
  int head = -1;
  LatticeVector direction;
  std::int64_t weight = 1;

  bool bounded() const noexcept { return head >= 0; }
};

struct TropicalGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  /// Edge ids of E_1..E_ℓ, in constraint order.
  std::vector<int> marked;

  std::size_t bounded_count() const;
  std::size_t unbounded_count() const;
};

struct TropicalCurve {
  TropicalGraph graph;
  std::vector<RatVector> positions;
  std::size_t n = 2;
};

/// An edge as seen from one of its vertices.
struct Flag {
  int edge;
  LatticeVector direction;  // primitive, pointing away from the vertex
  std::int64_t weight;
};

std::vector<Flag> flags_at(const TropicalGraph& g, int vertex);

/// Structural sanity: connectivity, primitive directions, positive weights, no
/// divalent vertices, and bounded directions consistent with positions.
/// Throws InputError or DegenerateEdge.
void validate_curve(const TropicalCurve& c);

struct BalancingViolation {
  int vertex;
  LatticeVector sum;
};

/// Throws DegenerateEdge if a bounded edge has equal endpoint positions.
std::vector<BalancingViolation> check_balancing(const TropicalCurve& c);

struct Degree {
  std::map<LatticeVector, std::int64_t> entries;

  std::int64_t cardinality() const;
  friend bool operator==(const Degree&, const Degree&) = default;
};

Degree degree_of(const TropicalCurve& c);
/// d copies each of (-1,0), (0,-1), (1,1).
Degree projective_degree(int d);

/// First Betti number; the graph must be connected.
std::int64_t genus_of(const TropicalGraph& g);

/// n + #bounded − rank of the cycle-closing system.
std::int64_t moduli_dimension(const TropicalCurve& c);
bool is_non_superabundant(const TropicalCurve& c);

/// Lattice length k of v == k * primitive(v). Throws DegenerateEdge on 0.
Rational lattice_length(const RatVector& v);

struct WeightedDirection {
  LatticeVector direction;  // primitive, in Z^2
  std::int64_t weight;
};

struct DualTriangle {
  std::array<WeightedDirection, 3> sides;
  std::int64_t twice_area = 0;
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
};

/// Builds the dual triangle of a balanced planar trivalent vertex.
/// Throws InputError if the triple is unbalanced or degenerate.
DualTriangle dual_triangle(const std::array<WeightedDirection, 3>& sides);

/// Interior lattice points by scanning the bounding box of an explicit
/// placement of the triangle. Independent of Pick's formula.
std::int64_t interior_points_brute_force(const DualTriangle& t);

struct VertexMultiplicities {
  std::int64_t mult = 0;
  int mult_r = 1;
  int mult_m = 0;
  DualTriangle triangle;
};

VertexMultiplicities vertex_multiplicities(const std::array<WeightedDirection, 3>& sides);
/// Throws NonTrivalent unless v has exactly three flags; planar curves only.
VertexMultiplicities vertex_multiplicities(const TropicalCurve& c, int v);

/// 0 if a bounded edge has even weight, else the product of vertex signs.
int curve_welschinger_mult(const TropicalCurve& c);

struct MikhalkinMults {
  Integer complex = 1;
  Integer real_m = 1;
};
MikhalkinMults curve_mikhalkin_mults(const TropicalCurve& c);

/// Translates all positions by the given vector.
TropicalCurve translated(const TropicalCurve& c, const RatVector& shift);
/// Scales all positions by s > 0.
TropicalCurve scaled(const TropicalCurve& c, const Rational& s);

}  // namespace tropcount
