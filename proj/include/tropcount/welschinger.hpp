#pragma once

// Node census of real lifts and the Welschinger aggregation.

#include <cstdint>
#include <map>
#include <vector>

#include "tropcount/tropical_core.hpp"

namespace tropcount {

struct NodeCensus {
  std::int64_t elliptic = 0;
  std::int64_t hyperbolic = 0;
  std::int64_t imaginary_pairs = 0;

  friend bool operator==(const NodeCensus&, const NodeCensus&) = default;
};

/// Nodes near an edge of weight mu. Throws InvalidZeta for an odd mu with
/// zeta == -1.
NodeCensus edge_census(std::int64_t mu, int zeta, int sign_t_pow);

struct CrossingSummary {
  std::int64_t count = 0;
  /// Σ w1·w2·|det(u1,u2)| over crossings: nodes at non-transverse-weight crossings.
  std::int64_t weighted = 0;
};

/// Crossings between non-adjacent edge images of a planar curve. Throws
/// NonGenericCrossing if an edge passes through a vertex or two edges overlap.
CrossingSummary crossing_summary(const TropicalCurve& c);
std::int64_t crossing_count(const TropicalCurve& c);

/// Σ_V I_V + Σ_bounded (w−1) + weighted crossings: the node total of a
/// nearby real rational curve.
std::int64_t node_count(const TropicalCurve& c);

struct LiftAssignment {
  /// Keys are exactly the even-weight bounded edges.
  std::map<int, int> zeta;
};

/// All 2^{#even bounded} lifts in canonical (binary counter) order.
std::vector<LiftAssignment> all_lifts(const TropicalCurve& c);

/// Throws NotGood if an even edge has lattice length not divisible by its weight.
int lift_sign(const TropicalCurve& c, const LiftAssignment& lift, int sign_t);

/// Σ of lift signs over all lifts, after rescaling the curve so every even
/// edge length is a multiple of its weight.
std::int64_t census_sum(const TropicalCurve& c, int sign_t);

Integer welschinger_total(const std::vector<TropicalCurve>& curves);

}  // namespace tropcount
