#include "tropcount/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <unordered_set>

#include "tropcount/exact_lattice.hpp"
#include "tropcount/incidence.hpp"
#include "tropcount/parallel.hpp"

namespace tropcount {

namespace {

LatticeVector negated(LatticeVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// ------------------------------------------------------------ tree types

struct TreeBuilder {
  std::size_t leaves;
  std::vector<LatticeVector> leaf_vectors;  // weighted
  std::vector<std::string> leaf_colour;
  std::vector<std::pair<int, int>> edges;
  std::size_t raw = 0;
  std::unordered_set<std::string> seen;
  std::vector<CombinatorialType> types;

  int internal_count() const { return static_cast<int>(leaves) - 2; }

  void grow(std::size_t next_leaf) {
    if (next_leaf == leaves) {
      ++raw;
      finish();
      return;
    }
    const int m = static_cast<int>(leaves + next_leaf - 2);  // next internal id
    const std::size_t count = edges.size();
    for (std::size_t i = 0; i < count; ++i) {
      const auto [a, b] = edges[i];
      edges[i] = {a, m};
      edges.emplace_back(m, b);
      edges.emplace_back(m, static_cast<int>(next_leaf));
      grow(next_leaf + 1);
      edges.pop_back();
      edges.pop_back();
      edges[i] = {a, b};
    }
  }

  void finish() {
    const int nodes = static_cast<int>(leaves) + internal_count();
    std::vector<std::vector<int>> adj(nodes);
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    // Root at leaf 0; sub[v] = Σ leaf vectors below v.
    std::vector<int> parent(nodes, -1), order;
    std::vector<bool> visited(nodes, false);
    order.push_back(0);
    visited[0] = true;
    for (std::size_t q = 0; q < order.size(); ++q)
      for (int w : adj[order[q]])
        if (!visited[w]) {
          visited[w] = true;
          parent[w] = order[q];
          order.push_back(w);
        }
    std::vector<LatticeVector> sub(nodes, LatticeVector{0, 0});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      if (v < static_cast<int>(leaves)) sub[v] = leaf_vectors[v];
      if (parent[v] >= 0) {
        sub[parent[v]][0] += sub[v][0];
        sub[parent[v]][1] += sub[v][1];
      }
    }
    for (int v = static_cast<int>(leaves); v < nodes; ++v)
      if (parent[v] >= static_cast<int>(leaves) && is_zero(sub[v])) return;

    std::string canon = canonical(adj);
    if (!seen.insert(canon).second) return;

    CombinatorialType t;
    t.canonical = std::move(canon);
    t.graph.vertex_count = internal_count();
    const int base = static_cast<int>(leaves);
    for (std::size_t l = 0; l < leaves; ++l) {
      const int v = adj[l][0] - base;
      const auto w = content(leaf_vectors[l]);
      t.graph.edges.push_back({v, -1, {leaf_vectors[l][0] / w, leaf_vectors[l][1] / w}, w});
    }
    for (int v = base; v < nodes; ++v) {
      const int p = parent[v];
      if (p < base) continue;
      const auto w = content(sub[v]);
      t.graph.edges.push_back({p - base, v - base, {sub[v][0] / w, sub[v][1] / w}, w});
    }
    types.push_back(std::move(t));
  }

  std::string encode(const std::vector<std::vector<int>>& adj, int v, int from) const {
    if (v < static_cast<int>(leaves)) return leaf_colour[v];
    std::vector<std::string> parts;
    for (int w : adj[v])
      if (w != from) parts.push_back(encode(adj, w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  }

  std::string canonical(const std::vector<std::vector<int>>& adj) const {
    std::string best;
    for (int r = static_cast<int>(leaves); r < static_cast<int>(adj.size()); ++r) {
      std::string s = encode(adj, r, -1);
      if (best.empty() || s < best) best = std::move(s);
    }
    return best;
  }
};

// ------------------------------------------------------------ position search

// v = s + a·d = q + r·e with a, r > 0. Signs are settled before dividing.
std::optional<RatVector> meet(const RatVector& s, const LatticeVector& d, const RatVector& q, const LatticeVector& e) {
  const long det = d[1] * e[0] - d[0] * e[1];  // cross(d, -e)
  if (det == 0) return std::nullopt;
  thread_local Rational w0, w1, na, nr;
  w0 = q[0] - s[0];
  w1 = q[1] - s[1];
  // a·d − r·e = w
  nr = d[0] * w1 - d[1] * w0;
  const int ds = det > 0 ? 1 : -1;
  if (sgn(nr) != ds) return std::nullopt;
  na = w1 * e[0] - w0 * e[1];
  if (sgn(na) != ds) return std::nullopt;
  na /= det;
  return RatVector{s[0] + na * d[0], s[1] + na * d[1]};
}

// A branch of the tree beyond some slot, fully placed: the points it uses,
// the edges they mark, and (for branches that pin a vertex) the line the
// vertex must lie on, as q + r·dir with r > 0.
struct Branch {
  RatVector q;
  LatticeVector dir;
  std::uint64_t mask = 0;
  std::vector<std::pair<int, int>> marks;  // (edge, point)
};

Branch merged(const Branch& a, const Branch& b) {
  Branch out;
  out.mask = a.mask | b.mask;
  out.marks = a.marks;
  out.marks.insert(out.marks.end(), b.marks.begin(), b.marks.end());
  return out;
}

// Every geometric solution is assembled from branches: a branch either pins
// its root vertex (a marked edge, or two sub-branches meeting at the far
// vertex) or is swept from a known point towards its end. Pinning results
// do not depend on where the root ends up, so they are memoized per slot.
class Searcher {
 public:
  Searcher(const CombinatorialType& type, const std::vector<RatVector>& points)
      : type_(type), points_(points), incident_(type.graph.vertex_count) {
    for (std::size_t i = 0; i < type.graph.edges.size(); ++i) {
      const Edge& e = type.graph.edges[i];
      incident_[e.tail].push_back(static_cast<int>(i));
      if (e.bounded()) incident_[e.head].push_back(static_cast<int>(i));
    }
  }

  /// Mark plans (edge per point) of all placements.
  std::vector<std::vector<int>> plans() {
    const std::size_t np = points_.size();
    const std::uint64_t all = np == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << np) - 1;
    std::vector<std::vector<int>> out;
    for (std::size_t e0 = 0; e0 < type_.graph.edges.size(); ++e0) {
      const int e = static_cast<int>(e0);
      const LatticeVector& u = type_.graph.edges[e0].direction;
      const auto fwd = sweep_from_point(e, 0, u);
      const auto back = sweep_from_point(e, 0, negated(u));
      for (const auto& a : fwd)
        for (const auto& b : back) {
          if ((a.mask & b.mask) || ((a.mask | b.mask) & 1)) continue;
          if ((a.mask | b.mask | 1) != all) continue;
          std::vector<int> plan(np, -1);
          plan[0] = e;
          for (const auto& [edge, p] : a.marks) plan[p] = edge;
          for (const auto& [edge, p] : b.marks) plan[p] = edge;
          out.push_back(std::move(plan));
        }
    }
    return out;
  }

 private:
  LatticeVector out_dir(int v, int e) const {
    const Edge& edge = type_.graph.edges[e];
    return edge.tail == v ? edge.direction : negated(edge.direction);
  }

  int far(int v, int e) const {
    const Edge& edge = type_.graph.edges[e];
    return edge.tail == v ? edge.head : edge.tail;
  }

  std::array<int, 2> others(int v, int e) const {
    std::array<int, 2> o{-1, -1};
    int k = 0;
    for (int f : incident_[v])
      if (f != e && k < 2) o[k++] = f;
    return o;
  }

  // Point p sits on edge e; sweep in direction d.
  const std::vector<Branch>& sweep_from_point(int e, std::size_t p, const LatticeVector& d) {
    const Edge& edge = type_.graph.edges[e];
    const bool forward = d == edge.direction;
    const auto key = std::make_tuple(e, p, forward);
    if (auto it = sweep_memo_.find(key); it != sweep_memo_.end()) return it->second;
    std::vector<Branch> out;
    if (!edge.bounded() && forward) {
      out.emplace_back();
    } else {
      const int x = !edge.bounded() ? edge.tail : (forward ? edge.head : edge.tail);
      out = step(x, e, points_[p], d);
    }
    return sweep_memo_[key] = std::move(out);
  }

  // Arriving at vertex x along edge `from`, on the ray s + a·d (a > 0).
  std::vector<Branch> step(int x, int from, const RatVector& s, const LatticeVector& d) {
    std::vector<Branch> out;
    const auto slots = others(x, from);
    for (int i = 0; i < 2; ++i) {
      const int other = slots[1 - i];
      for (const auto& pin : pinned(x, slots[i])) {
        const auto px = meet(s, d, pin.q, pin.dir);
        if (!px) continue;
        for (const auto& rest : sweep_from_vertex(x, other, *px)) {
          if (pin.mask & rest.mask) continue;
          out.push_back(merged(pin, rest));
        }
      }
    }
    return out;
  }

  // x is placed at px; edge o leaves it unmarked.
  std::vector<Branch> sweep_from_vertex(int x, int o, const RatVector& px) {
    const Edge& edge = type_.graph.edges[o];
    if (!edge.bounded()) return {Branch{}};
    return step(far(x, o), o, px, out_dir(x, o));
  }

  // Branches beyond slot f of v that pin v to a line.
  const std::vector<Branch>& pinned(int v, int f) {
    const auto key = std::make_pair(v, f);
    if (auto it = pin_memo_.find(key); it != pin_memo_.end()) return it->second;
    std::vector<Branch> out;
    const Edge& e = type_.graph.edges[f];
    const LatticeVector u = out_dir(v, f);
    const LatticeVector back = negated(u);
    for (std::size_t p = 0; p < points_.size(); ++p) {
      Branch b;
      b.q = points_[p];
      b.dir = back;
      b.mask = std::uint64_t{1} << p;
      b.marks = {{f, static_cast<int>(p)}};
      if (!e.bounded()) {
        out.push_back(std::move(b));
        continue;
      }
      for (const auto& rest : sweep_from_point(f, p, u)) {
        if (rest.mask & b.mask) continue;
        Branch m = merged(b, rest);
        m.q = b.q;
        m.dir = back;
        out.push_back(std::move(m));
      }
    }
    if (e.bounded()) {
      const int x = far(v, f);
      const auto g = others(x, f);
      const std::vector<Branch>& first = pinned(x, g[0]);
      const std::vector<Branch>& second = pinned(x, g[1]);
      for (const auto& b1 : first)
        for (const auto& b2 : second) {
          if (b1.mask & b2.mask) continue;
          const auto px = meet(b1.q, b1.dir, b2.q, b2.dir);
          if (!px) continue;
          Branch m = merged(b1, b2);
          m.q = *px;
          m.dir = back;
          out.push_back(std::move(m));
        }
    }
    return pin_memo_[key] = std::move(out);
  }

  const CombinatorialType& type_;
  const std::vector<RatVector>& points_;
  std::vector<std::vector<int>> incident_;
  std::map<std::pair<int, int>, std::vector<Branch>> pin_memo_;
  std::map<std::tuple<int, std::size_t, bool>, std::vector<Branch>> sweep_memo_;
};

}  // namespace

TypeEnumeration enumerate_types(std::int64_t genus, const Degree& degree) {
  if (genus != 0) throw Error(ErrorCode::UnsupportedGenus, "only rational (genus 0) types are enumerated");
  TypeEnumeration out;
  std::vector<LatticeVector> leaves;
  for (const auto& [v, m] : degree.entries) {
    if (v.size() != 2 || is_zero(v)) throw Error(ErrorCode::InputError, "degree vectors must be nonzero in Z^2");
    for (std::int64_t i = 0; i < m; ++i) leaves.push_back(v);
  }
  LatticeVector sum{0, 0};
  for (const auto& v : leaves) {
    sum[0] += v[0];
    sum[1] += v[1];
  }
  if (!is_zero(sum)) throw Error(ErrorCode::InputError, "degree vectors do not sum to zero");
  if (leaves.size() < 3) return out;
  if (leaves.size() > 12) throw Error(ErrorCode::InputError, "degree too large for type enumeration");

  TreeBuilder b;
  b.leaves = leaves.size();
  b.leaf_vectors = leaves;
  for (const auto& v : leaves) b.leaf_colour.push_back("[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "]");
  const int root = static_cast<int>(leaves.size());
  b.edges = {{root, 0}, {root, 1}, {root, 2}};
  b.grow(3);
  out.raw_trees = b.raw;
  out.types = std::move(b.types);
  std::sort(out.types.begin(), out.types.end(),
            [](const CombinatorialType& a, const CombinatorialType& c) { return a.canonical < c.canonical; });
  return out;
}

PointConfiguration mikhalkin_configuration(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> big(1000, 5000), shift(-100, 100);
  long f = 0, g = 0;
  do {
    f = big(rng);
    g = big(rng);
  } while (std::gcd(f, g) != 1);
  const long c = shift(rng);
  const Integer ratio = 16;
  PointConfiguration pc;
  pc.mode = "mikhalkin";
  pc.seed = seed;
  for (std::size_t i = 0; i < count; ++i) {
    Integer step;
    mpz_pow_ui(step.get_mpz_t(), ratio.get_mpz_t(), i * (i + 1) / 2);
    pc.points.push_back({Rational(g * step), Rational(f * step + c)});
  }
  return pc;
}

namespace {

// `singular` reports a consistent system without a unique solution.
std::optional<TropicalCurve> solve_checked(const CombinatorialType& type, const PointConfiguration& points,
                                           const std::vector<int>& mark_plan, bool& singular) {
  singular = false;
  const auto& g = type.graph;
  const auto& pts = points.points;
  if (mark_plan.size() != pts.size()) return std::nullopt;
  const std::size_t unknowns = 2 * static_cast<std::size_t>(g.vertex_count);
  std::vector<RatVector> rows;
  RatVector rhs;
  auto x = [](int v) { return 2 * static_cast<std::size_t>(v); };
  for (const auto& e : g.edges) {
    if (!e.bounded()) continue;
    RatVector row(unknowns, Rational(0));
    const long u0 = e.direction[0], u1 = e.direction[1];
    row[x(e.head) + 1] += u0;
    row[x(e.head)] -= u1;
    row[x(e.tail) + 1] -= u0;
    row[x(e.tail)] += u1;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(0));
  }
  for (std::size_t j = 0; j < mark_plan.size(); ++j) {
    if (mark_plan[j] < 0 || static_cast<std::size_t>(mark_plan[j]) >= g.edges.size()) return std::nullopt;
    const Edge& e = g.edges[mark_plan[j]];
    const long u0 = e.direction[0], u1 = e.direction[1];
    RatVector row(unknowns, Rational(0));
    row[x(e.tail) + 1] = u0;
    row[x(e.tail)] = -u1;
    rows.push_back(std::move(row));
    rhs.push_back(pts[j][1] * u0 - pts[j][0] * u1);
  }
  const auto sol = lattice::solve_rational(rows, rhs);
  if (!sol) return std::nullopt;
  if (!sol->unique) {
    singular = true;
    return std::nullopt;
  }

  TropicalCurve c;
  c.n = 2;
  c.graph = g;
  c.graph.marked = mark_plan;
  c.positions.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) c.positions[v] = {sol->x[x(v)], sol->x[x(v) + 1]};
  auto along = [](const RatVector& d, const LatticeVector& u) -> Rational {
    return d[0] * static_cast<long>(u[0]) + d[1] * static_cast<long>(u[1]);
  };
  for (const auto& e : g.edges)
    if (e.bounded() && along(c.positions[e.head] - c.positions[e.tail], e.direction) <= 0) return std::nullopt;
  for (std::size_t j = 0; j < mark_plan.size(); ++j) {
    const Edge& e = g.edges[mark_plan[j]];
    if (along(pts[j] - c.positions[e.tail], e.direction) <= 0) return std::nullopt;
    if (e.bounded() && along(pts[j] - c.positions[e.head], e.direction) >= 0) return std::nullopt;
  }
  return c;
}

}  // namespace

std::optional<TropicalCurve> solve_positions(const CombinatorialType& type, const PointConfiguration& points,
                                             const std::vector<int>& mark_plan) {
  bool singular = false;
  return solve_checked(type, points, mark_plan, singular);
}

std::string curve_key(const TropicalCurve& c) {
  std::vector<std::string> parts;
  std::map<int, std::size_t> mark_of;
  for (std::size_t j = 0; j < c.graph.marked.size(); ++j) mark_of[c.graph.marked[j]] = j;
  for (std::size_t i = 0; i < c.graph.edges.size(); ++i) {
    const Edge& e = c.graph.edges[i];
    std::string s;
    if (e.bounded()) {
      std::string a = format_vector(c.positions[e.tail]), b = format_vector(c.positions[e.head]);
      if (b < a) std::swap(a, b);
      s = "S" + a + b;
    } else {
      s = "R" + format_vector(c.positions[e.tail]) + format_vector(e.direction);
    }
    s += "w" + std::to_string(e.weight);
    if (auto it = mark_of.find(static_cast<int>(i)); it != mark_of.end()) s += "m" + std::to_string(it->second);
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + ";";
  return key;
}

EnumerationResult enumerate_curves(std::int64_t genus, const Degree& degree, const PointConfiguration& points) {
  const auto types = enumerate_types(genus, degree);
  EnumerationResult out;
  out.raw_trees = types.raw_trees;
  out.type_count = types.types.size();
  const std::size_t expected_points =
      static_cast<std::size_t>(std::max<std::int64_t>(0, degree.cardinality() + genus - 1));
  if (points.points.size() != expected_points)
    throw Error(ErrorCode::InputError, "expected " + std::to_string(expected_points) + " points, got " +
                                           std::to_string(points.points.size()));
  if (points.points.size() > 60) throw Error(ErrorCode::InputError, "too many points");
  for (const auto& p : points.points)
    if (p.size() != 2) throw Error(ErrorCode::InputError, "points must be planar");
  {
    std::set<RatVector> distinct(points.points.begin(), points.points.end());
    if (distinct.size() != points.points.size()) throw Error(ErrorCode::GenericityFailure, "repeated point");
  }
  if (types.types.empty()) return out;
  {
    std::set<LatticeVector> directions;
    for (const auto& t : types.types)
      for (const auto& e : t.graph.edges) directions.insert(e.direction);
    const auto& pts = points.points;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const RatVector d = pts[j] - pts[i];
        for (const auto& u : directions)
          if (d[0] * static_cast<long>(u[1]) == d[1] * static_cast<long>(u[0]))
            throw Error(ErrorCode::GenericityFailure, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                          " differ by a multiple of the edge direction " +
                                                          format_vector(u));
      }
  }

  std::vector<std::map<std::string, TropicalCurve>> per_type(types.types.size());
  parallel_for(types.types.size(), [&](std::size_t ti) {
    const auto& type = types.types[ti];
    auto& found = per_type[ti];
    for (const auto& plan : Searcher(type, points.points).plans()) {
      bool singular = false;
      auto curve = solve_checked(type, points, plan, singular);
      // The system is square, so consistency without uniqueness needs special points.
      if (singular) throw Error(ErrorCode::GenericityFailure, "incidence system has a positive-dimensional solution set");
      if (curve) found.emplace(curve_key(*curve), std::move(*curve));
    }
  });

  std::map<std::string, TropicalCurve> merged;
  for (auto& m : per_type)
    for (auto& [k, c] : m) merged.emplace(k, std::move(c));

  std::vector<AffineConstraint> constraints;
  for (const auto& p : points.points) constraints.push_back(AffineConstraint::point(p));
  for (auto& [k, c] : merged) {
    std::set<RatVector> vs(c.positions.begin(), c.positions.end());
    if (vs.size() != c.positions.size()) throw Error(ErrorCode::GenericityFailure, "two vertices share an image");
    if (!check_balancing(c).empty()) throw Error(ErrorCode::InternalMismatch, "unbalanced enumerated curve");
    std::vector<int> matched;
    try {
      matched = match_marked_edges(c, constraints);
    } catch (const Error& e) {
      throw Error(ErrorCode::GenericityFailure, std::string("points are not generic: ") + e.what());
    }
    if (matched != c.graph.marked) throw Error(ErrorCode::GenericityFailure, "a point meets an unexpected edge");
    if (!is_non_superabundant(c)) throw Error(ErrorCode::GenericityFailure, "superabundant curve");
    out.curves.push_back(std::move(c));
  }
  return out;
}

}  // namespace tropcount
