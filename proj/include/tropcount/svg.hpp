#pragma once

// Static SVG 1.1 drawings of curve sets. Output depends only on the input.

#include <string>
#include <vector>

#include "tropcount/io.hpp"

namespace tropcount::svg {

/// Lattice point of each complement region around a planar trivalent curve,
/// listed per vertex in counterclockwise flag order. Translated so the
/// smallest coordinates are zero.
std::vector<std::vector<LatticeVector>> dual_polygons(const TropicalCurve& c);

/// All curves overlaid in one panel, plus one dual-subdivision panel per
/// curve when `dual` is set.
std::string render(const io::CurveSet& s, bool dual);

}  // namespace tropcount::svg
