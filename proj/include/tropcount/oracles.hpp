#pragma once

// Independent counts used to cross-check the enumeration: the Kontsevich
// recursion for complex plane rational curves, and Mikhalkin's lattice paths
// in the degree-d triangle with complex and Welschinger multiplicities.

#include "tropcount/types.hpp"

namespace tropcount::oracles {

/// Number of complex rational plane curves of degree d through 3d−1 points.
Integer kontsevich(int d);

struct PathTotals {
  Integer complex = 0;
  Integer welschinger = 0;
  std::size_t paths = 0;  // λ-increasing paths of the right length
};

/// Totals over λ-increasing lattice paths with 3d−1 steps, λ(x, y) = Kx − y
/// for K > d. Reducible curves of the same Euler characteristic are counted
/// too; they first appear at d = 4 (a line and a smooth cubic).
PathTotals lattice_path_oracle(int d);

}  // namespace tropcount::oracles
