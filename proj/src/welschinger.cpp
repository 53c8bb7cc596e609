#include "tropcount/welschinger.hpp"

#include <cstdlib>
#include <optional>
#include <string>

#include "tropcount/polyhedral.hpp"

namespace tropcount {

NodeCensus edge_census(std::int64_t mu, int zeta, int sign_t_pow) {
  if (mu < 1) throw Error(ErrorCode::InputError, "edge weight must be positive");
  if ((zeta != 1 && zeta != -1) || (sign_t_pow != 1 && sign_t_pow != -1))
    throw Error(ErrorCode::InputError, "signs must be +1 or -1");
  if (mu % 2 == 1) {
    if (zeta == -1) throw Error(ErrorCode::InvalidZeta, "odd weight admits only zeta = +1");
    return {mu - 1, 0, 0};
  }
  if (zeta * sign_t_pow > 0) return {mu - 1, 0, 0};
  return {0, 1, (mu - 2) / 2};
}

namespace {

std::int64_t cross2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

Rational cross2(const RatVector& a, const LatticeVector& b) {
  return a[0] * static_cast<long>(b[1]) - a[1] * static_cast<long>(b[0]);
}

struct Piece {
  RatVector start;
  LatticeVector dir;
  std::optional<Rational> length;  // nullopt for rays
};

Piece piece_of(const TropicalCurve& c, const Edge& e) {
  Piece p{c.positions[e.tail], e.direction, std::nullopt};
  if (e.bounded()) p.length = lattice_length(c.positions[e.head] - c.positions[e.tail]);
  return p;
}

bool inside(const Rational& t, const Piece& p, bool open) {
  if (open ? t <= 0 : t < 0) return false;
  if (!p.length) return true;
  return open ? t < *p.length : t <= *p.length;
}

}  // namespace

CrossingSummary crossing_summary(const TropicalCurve& c) {
  if (c.n != 2) throw Error(ErrorCode::InputError, "crossings need a planar curve");
  const auto& edges = c.graph.edges;
  CrossingSummary out;
  // Edge through a foreign vertex.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Piece p = piece_of(c, edges[i]);
    for (int v = 0; v < c.graph.vertex_count; ++v) {
      if (v == edges[i].tail || v == edges[i].head) continue;
      const RatVector d = c.positions[v] - p.start;
      if (cross2(d, p.dir) != 0) continue;
      const Rational t = (d[0] * static_cast<long>(p.dir[0]) + d[1] * static_cast<long>(p.dir[1])) /
                         Rational(p.dir[0] * p.dir[0] + p.dir[1] * p.dir[1]);
      if (inside(t, p, false))
        throw Error(ErrorCode::NonGenericCrossing,
                    "edge " + std::to_string(i) + " passes through vertex " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      auto shares = [](const Edge& x, const Edge& y) {
        return x.tail == y.tail || (y.bounded() && x.tail == y.head) ||
               (x.bounded() && (x.head == y.tail || (y.bounded() && x.head == y.head)));
      };
      if (shares(a, b)) continue;
      const Piece p = piece_of(c, a), q = piece_of(c, b);
      const std::int64_t det = cross2(p.dir, q.dir);
      const RatVector d = q.start - p.start;
      if (det == 0) {
        if (cross2(d, p.dir) != 0) continue;  // parallel, distinct lines
        // Collinear: compare parameter ranges along p.dir (q.dir == ±p.dir).
        const long dot = p.dir[0] * q.dir[0] + p.dir[1] * q.dir[1];
        const Rational s0 = (d[0] * static_cast<long>(p.dir[0]) + d[1] * static_cast<long>(p.dir[1])) /
                            Rational(p.dir[0] * p.dir[0] + p.dir[1] * p.dir[1]);
        std::optional<Rational> q_lo, q_hi;
        if (dot > 0) {
          q_lo = s0;
          if (q.length) q_hi = s0 + *q.length;
        } else {
          q_hi = s0;
          if (q.length) q_lo = s0 - *q.length;
        }
        const bool below = q_hi && *q_hi <= 0;
        const bool above = p.length && q_lo && *q_lo >= *p.length;
        if (!below && !above) throw Error(ErrorCode::NonGenericCrossing, "overlapping edges");
        continue;
      }
      // p.start + t p.dir == q.start + s q.dir
      const Rational t = cross2(d, q.dir) / det;
      const Rational s = cross2(d, p.dir) / det;
      if (!inside(t, p, true) || !inside(s, q, true)) continue;
      ++out.count;
      out.weighted += a.weight * b.weight * std::llabs(det);
    }
  return out;
}

std::int64_t crossing_count(const TropicalCurve& c) { return crossing_summary(c).count; }

std::int64_t node_count(const TropicalCurve& c) {
  std::int64_t total = crossing_summary(c).weighted;
  for (int v = 0; v < c.graph.vertex_count; ++v) total += vertex_multiplicities(c, v).triangle.interior;
  for (const auto& e : c.graph.edges)
    if (e.bounded()) total += e.weight - 1;
  return total;
}

std::vector<LiftAssignment> all_lifts(const TropicalCurve& c) {
  std::vector<int> even;
  for (std::size_t i = 0; i < c.graph.edges.size(); ++i)
    if (c.graph.edges[i].bounded() && c.graph.edges[i].weight % 2 == 0) even.push_back(static_cast<int>(i));
  if (even.size() >= 30) throw Error(ErrorCode::InputError, "too many even edges to enumerate lifts");
  std::vector<LiftAssignment> out;
  for (std::uint32_t mask = 0; mask < (1u << even.size()); ++mask) {
    LiftAssignment l;
    for (std::size_t k = 0; k < even.size(); ++k) l.zeta[even[k]] = ((mask >> k) & 1) ? -1 : 1;
    out.push_back(std::move(l));
  }
  return out;
}

int lift_sign(const TropicalCurve& c, const LiftAssignment& lift, int sign_t) {
  if (sign_t != 1 && sign_t != -1) throw Error(ErrorCode::InputError, "sign_t must be +1 or -1");
  std::int64_t interior = 0;
  for (int v = 0; v < c.graph.vertex_count; ++v) interior += vertex_multiplicities(c, v).triangle.interior;
  int sign = interior % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < c.graph.edges.size(); ++i) {
    const Edge& e = c.graph.edges[i];
    if (!e.bounded()) continue;
    int zeta = 1, pow = 1;
    if (e.weight % 2 == 0) {
      const auto it = lift.zeta.find(static_cast<int>(i));
      if (it == lift.zeta.end()) throw Error(ErrorCode::InputError, "lift misses an even edge");
      zeta = it->second;
      const Rational q = lattice_length(c.positions[e.head] - c.positions[e.tail]) / e.weight;
      if (q.get_den() != 1)
        throw Error(ErrorCode::NotGood, "edge " + std::to_string(i) + " length is not a multiple of its weight");
      pow = (sign_t < 0 && mpz_odd_p(q.get_num_mpz_t())) ? -1 : 1;
    } else if (lift.zeta.count(static_cast<int>(i)) && lift.zeta.at(static_cast<int>(i)) != 1) {
      throw Error(ErrorCode::InvalidZeta, "odd edge " + std::to_string(i) + " assigned zeta = -1");
    }
    if (edge_census(e.weight, zeta, pow).elliptic % 2 != 0) sign = -sign;
  }
  return sign;
}

std::int64_t census_sum(const TropicalCurve& c, int sign_t) {
  const Integer s = rescale_for_goodness({c}, {});
  const TropicalCurve good = scaled(c, Rational(s));
  std::int64_t sum = 0;
  for (const auto& lift : all_lifts(good)) sum += lift_sign(good, lift, sign_t);
  return sum;
}

Integer welschinger_total(const std::vector<TropicalCurve>& curves) {
  Integer w = 0;
  for (const auto& c : curves) w += curve_welschinger_mult(c);
  return w;
}

}  // namespace tropcount
