#include "tropcount/tropical_core.hpp"

#include <cassert>
#include <numeric>

#include "tropcount/exact_lattice.hpp"

namespace tropcount {

std::size_t TropicalGraph::bounded_count() const {
  std::size_t k = 0;
  for (const auto& e : edges) k += e.bounded() ? 1 : 0;
  return k;
}

std::size_t TropicalGraph::unbounded_count() const { return edges.size() - bounded_count(); }

std::vector<Flag> flags_at(const TropicalGraph& g, int vertex) {
  std::vector<Flag> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.tail == vertex) out.push_back({static_cast<int>(i), e.direction, e.weight});
    if (e.bounded() && e.head == vertex) {
      LatticeVector neg(e.direction.size());
      for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -e.direction[k];
      out.push_back({static_cast<int>(i), neg, e.weight});
    }
  }
  return out;
}

void validate_curve(const TropicalCurve& c) {
  const auto& g = c.graph;
  if (g.vertex_count <= 0) throw Error(ErrorCode::InputError, "curve has no vertices");
  if (c.positions.size() != static_cast<std::size_t>(g.vertex_count))
    throw Error(ErrorCode::InputError, "one position per vertex required");
  for (const auto& p : c.positions)
    if (p.size() != c.n) throw Error(ErrorCode::InputError, "position has wrong dimension");

  std::vector<int> degree(g.vertex_count, 0);
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const std::string tag = "edge " + std::to_string(i);
    if (e.tail < 0 || e.tail >= g.vertex_count || e.head >= g.vertex_count)
      throw Error(ErrorCode::InputError, tag + " references a missing vertex");
    if (e.weight < 1) throw Error(ErrorCode::InputError, tag + " has non-positive weight");
    if (e.direction.size() != c.n || !is_primitive(e.direction))
      throw Error(ErrorCode::InputError, tag + " direction is not primitive in Z^n");
    ++degree[e.tail];
    if (e.bounded()) {
      if (e.head == e.tail) throw Error(ErrorCode::InputError, tag + " is a loop");
      ++degree[e.head];
      parent[find(e.tail)] = find(e.head);
      const RatVector delta = c.positions[e.head] - c.positions[e.tail];
      const auto pd = primitive_decomposition(delta);  // DegenerateEdge on zero
      if (pd.direction != e.direction)
        throw Error(ErrorCode::InputError, tag + " direction disagrees with its endpoint positions");
    }
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (degree[v] == 2) throw Error(ErrorCode::InputError, "divalent vertex " + std::to_string(v));
    if (find(v) != find(0)) throw Error(ErrorCode::InputError, "graph is disconnected");
  }
  for (int m : g.marked)
    if (m < 0 || static_cast<std::size_t>(m) >= g.edges.size())
      throw Error(ErrorCode::InputError, "marked edge id out of range");
}

std::vector<BalancingViolation> check_balancing(const TropicalCurve& c) {
  for (const auto& e : c.graph.edges)
    if (e.bounded() && c.positions[e.tail] == c.positions[e.head])
      throw Error(ErrorCode::DegenerateEdge, "bounded edge with equal endpoints");
  std::vector<BalancingViolation> out;
  for (int v = 0; v < c.graph.vertex_count; ++v) {
    LatticeVector sum(c.n, 0);
    for (const auto& f : flags_at(c.graph, v))
      for (std::size_t k = 0; k < c.n; ++k) sum[k] += f.weight * f.direction[k];
    if (!is_zero(sum)) out.push_back({v, sum});
  }
  return out;
}

std::int64_t Degree::cardinality() const {
  std::int64_t k = 0;
  for (const auto& [v, m] : entries) k += m;
  return k;
}

Degree degree_of(const TropicalCurve& c) {
  Degree d;
  for (const auto& e : c.graph.edges) {
    if (e.bounded()) continue;
    LatticeVector v = e.direction;
    for (auto& x : v) x *= e.weight;
    ++d.entries[v];
  }
  return d;
}

Degree projective_degree(int d) {
  Degree out;
  if (d <= 0) return out;
  out.entries[{-1, 0}] = d;
  out.entries[{0, -1}] = d;
  out.entries[{1, 1}] = d;
  return out;
}

std::int64_t genus_of(const TropicalGraph& g) {
  return static_cast<std::int64_t>(g.bounded_count()) - g.vertex_count + 1;
}

std::int64_t moduli_dimension(const TropicalCurve& c) {
  const auto& g = c.graph;
  std::vector<int> bounded;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].bounded()) bounded.push_back(static_cast<int>(i));
  const std::size_t nb = bounded.size();

  // Spanning tree by BFS; every non-tree edge closes one fundamental cycle.
  std::vector<int> parent_edge(g.vertex_count, -2), parent_vertex(g.vertex_count, -1);
  std::vector<int> order{0};
  parent_edge[0] = -1;
  std::vector<bool> tree(g.edges.size(), false);
  for (std::size_t q = 0; q < order.size(); ++q) {
    int v = order[q];
    for (int ei : bounded) {
      const Edge& e = g.edges[ei];
      int w = e.tail == v ? e.head : (e.head == v ? e.tail : -1);
      if (w < 0 || parent_edge[w] != -2) continue;
      parent_edge[w] = ei;
      parent_vertex[w] = v;
      tree[ei] = true;
      order.push_back(w);
    }
  }
  std::vector<int> depth(g.vertex_count, 0);
  for (int v : order)
    if (parent_vertex[v] >= 0) depth[v] = depth[parent_vertex[v]] + 1;

  std::vector<RatVector> rows;
  std::vector<std::size_t> column(g.edges.size(), 0);
  for (std::size_t k = 0; k < nb; ++k) column[bounded[k]] = k;
  for (int ei : bounded) {
    if (tree[ei]) continue;
    // Cycle: tail -> head along ei, then back to tail through the tree.
    std::vector<Rational> coef(nb, Rational(0));
    coef[column[ei]] += 1;  // traversed tail -> head
    int a = g.edges[ei].head, b = g.edges[ei].tail;
    // Walk from a and b to their common ancestor; path a -> lca -> b.
    while (a != b) {
      if (depth[a] >= depth[b]) {
        int pe = parent_edge[a];
        const Edge& e = g.edges[pe];
        // moving a -> parent(a)
        coef[column[pe]] += (e.tail == a) ? 1 : -1;
        a = parent_vertex[a];
      } else {
        int pe = parent_edge[b];
        const Edge& e = g.edges[pe];
        // this step is parent(b) -> b on the path
        coef[column[pe]] += (e.head == b) ? 1 : -1;
        b = parent_vertex[b];
      }
    }
    for (std::size_t k = 0; k < c.n; ++k) {
      RatVector row(nb, Rational(0));
      for (std::size_t j = 0; j < nb; ++j)
        row[j] = coef[j] * static_cast<long>(g.edges[bounded[j]].direction[k]);
      rows.push_back(row);
    }
  }
  std::size_t rk = 0;
  if (!rows.empty()) {
    lattice::IntMatrix m(rows.size(), nb);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t j = 0; j < nb; ++j) m(r, j) = rows[r][j].get_num();
    rk = lattice::rank(m);
  }
  return static_cast<std::int64_t>(c.n + nb) - static_cast<std::int64_t>(rk);
}

bool is_non_superabundant(const TropicalCurve& c) {
  const std::int64_t n = static_cast<std::int64_t>(c.n);
  const std::int64_t expected = (n - 3) * (1 - genus_of(c.graph)) + degree_of(c).cardinality();
  return moduli_dimension(c) == expected;
}

Rational lattice_length(const RatVector& v) { return primitive_decomposition(v).scale; }

namespace {

std::int64_t cross2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

DualTriangle dual_triangle(const std::array<WeightedDirection, 3>& sides) {
  LatticeVector sum{0, 0};
  for (const auto& s : sides) {
    if (s.direction.size() != 2 || !is_primitive(s.direction) || s.weight < 1)
      throw Error(ErrorCode::InputError, "dual triangle needs primitive planar directions");
    sum[0] += s.weight * s.direction[0];
    sum[1] += s.weight * s.direction[1];
  }
  if (!is_zero(sum)) throw Error(ErrorCode::InputError, "unbalanced vertex " + format_vector(sum));
  DualTriangle t;
  t.sides = sides;
  t.twice_area = sides[0].weight * sides[1].weight *
                 std::llabs(cross2(sides[0].direction, sides[1].direction));
  if (t.twice_area == 0) throw Error(ErrorCode::InputError, "degenerate dual triangle");
  // Each side has lattice length equal to the edge weight.
  t.boundary = sides[0].weight + sides[1].weight + sides[2].weight;
  t.interior = (t.twice_area - t.boundary) / 2 + 1;
#ifndef NDEBUG
  assert(t.interior == interior_points_brute_force(t));
#endif
  return t;
}

std::int64_t interior_points_brute_force(const DualTriangle& t) {
  // Sides w_i * rot90(u_i) close up since the edges balance.
  std::array<LatticeVector, 3> p;
  p[0] = {0, 0};
  for (int i = 0; i < 2; ++i) {
    const auto& s = t.sides[i];
    p[i + 1] = {p[i][0] - s.weight * s.direction[1], p[i][1] + s.weight * s.direction[0]};
  }
  std::int64_t xmin = p[0][0], xmax = p[0][0], ymin = p[0][1], ymax = p[0][1];
  for (const auto& q : p) {
    xmin = std::min(xmin, q[0]);
    xmax = std::max(xmax, q[0]);
    ymin = std::min(ymin, q[1]);
    ymax = std::max(ymax, q[1]);
  }
  auto side = [](const LatticeVector& a, const LatticeVector& b, std::int64_t x, std::int64_t y) {
    return (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
  };
  const std::int64_t orient = side(p[0], p[1], p[2][0], p[2][1]) > 0 ? 1 : -1;
  std::int64_t count = 0;
  for (std::int64_t x = xmin; x <= xmax; ++x)
    for (std::int64_t y = ymin; y <= ymax; ++y)
      if (orient * side(p[0], p[1], x, y) > 0 && orient * side(p[1], p[2], x, y) > 0 &&
          orient * side(p[2], p[0], x, y) > 0)
        ++count;
  return count;
}

VertexMultiplicities vertex_multiplicities(const std::array<WeightedDirection, 3>& sides) {
  VertexMultiplicities vm;
  vm.triangle = dual_triangle(sides);
  vm.mult = vm.triangle.twice_area;
  vm.mult_r = (vm.triangle.interior % 2 == 0) ? 1 : -1;
  vm.mult_m = (vm.mult % 2 == 0) ? 0 : (((vm.mult - 1) / 2) % 2 == 0 ? 1 : -1);
  return vm;
}

VertexMultiplicities vertex_multiplicities(const TropicalCurve& c, int v) {
  if (c.n != 2) throw Error(ErrorCode::InputError, "vertex multiplicities need a planar curve");
  const auto flags = flags_at(c.graph, v);
  if (flags.size() != 3)
    throw Error(ErrorCode::NonTrivalent, "vertex " + std::to_string(v) + " has valence " +
                                             std::to_string(flags.size()));
  std::array<WeightedDirection, 3> sides;
  for (int i = 0; i < 3; ++i) sides[i] = {flags[i].direction, flags[i].weight};
  return vertex_multiplicities(sides);
}

int curve_welschinger_mult(const TropicalCurve& c) {
  for (const auto& e : c.graph.edges)
    if (e.bounded() && e.weight % 2 == 0) return 0;
  int sign = 1;
  for (int v = 0; v < c.graph.vertex_count; ++v) sign *= vertex_multiplicities(c, v).mult_r;
  return sign;
}

MikhalkinMults curve_mikhalkin_mults(const TropicalCurve& c) {
  MikhalkinMults m;
  for (int v = 0; v < c.graph.vertex_count; ++v) {
    const auto vm = vertex_multiplicities(c, v);
    m.complex *= vm.mult;
    m.real_m *= vm.mult_m;
  }
  return m;
}

TropicalCurve translated(const TropicalCurve& c, const RatVector& shift) {
  TropicalCurve out = c;
  for (auto& p : out.positions) p = p + shift;
  return out;
}

TropicalCurve scaled(const TropicalCurve& c, const Rational& s) {
  TropicalCurve out = c;
  for (auto& p : out.positions)
    for (auto& x : p) x *= s;
  return out;
}

}  // namespace tropcount
