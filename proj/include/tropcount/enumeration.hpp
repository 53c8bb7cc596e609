#pragma once

// Rational plane tropical curves of a given degree through points: trivalent
// types with balanced edge data, and an exact position search per type.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcount/tropical_core.hpp"

namespace tropcount {

/// Abstract trivalent graph whose unbounded edges carry the degree's vectors
/// and whose bounded edges carry the directions forced by balancing.
/// Vertices are the internal nodes; positions are not yet known.
struct CombinatorialType {
  TropicalGraph graph;
  std::string canonical;
};

struct TypeEnumeration {
  std::size_t raw_trees = 0;  // labeled trivalent trees before pruning
  std::vector<CombinatorialType> types;
};

/// Throws UnsupportedGenus for genus != 0.
TypeEnumeration enumerate_types(std::int64_t genus, const Degree& degree);

struct PointConfiguration {
  std::vector<RatVector> points;
  std::string mode = "explicit";
  std::uint64_t seed = 0;
};

/// `count` integral points on a line of slope F/G (coprime, both in the
/// thousands) at super-exponentially growing spacing.
PointConfiguration mikhalkin_configuration(std::size_t count, std::uint64_t seed);

/// mark_plan[j] is the edge of the type carrying point j. Solves the linear
/// incidence system and accepts only a unique solution with positive edge
/// lengths and every point in the relative interior of its edge. The result
/// carries the plan in graph.marked.
std::optional<TropicalCurve> solve_positions(const CombinatorialType& type, const PointConfiguration& points,
                                             const std::vector<int>& mark_plan);

struct EnumerationResult {
  std::size_t raw_trees = 0;
  std::size_t type_count = 0;
  std::vector<TropicalCurve> curves;
};

/// All marked curves of the degree through the points, sorted by a canonical
/// geometric key. Throws GenericityFailure when two points differ by a
/// multiple of a possible edge direction, when a searched plan gives a
/// consistent singular system, or when a solution violates genericity;
/// callers should pick other points.
EnumerationResult enumerate_curves(std::int64_t genus, const Degree& degree, const PointConfiguration& points);

/// Geometric key used for deduplication and ordering.
std::string curve_key(const TropicalCurve& c);

}  // namespace tropcount
