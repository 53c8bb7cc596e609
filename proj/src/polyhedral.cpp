#include "tropcount/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace tropcount {

std::vector<int> PolyhedralDecomposition::cells_of_dim(std::size_t d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == d) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<LatticeVector> Fan::rays() const {
  std::vector<LatticeVector> out;
  for (const auto& c : cones)
    if (c.dim == 1 && c.generators.size() == 1) out.push_back(c.generators[0]);
  return out;
}

namespace {

// ------------------------------------------------------------ planar angles

int half_plane(const LatticeVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }
int half_plane(const RatVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

std::int64_t cross(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational cross(const RatVector& a, const RatVector& b) { return a[0] * b[1] - a[1] * b[0]; }

template <class V>
bool angle_less(const V& a, const V& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

LatticeVector rot90(const LatticeVector& v) { return {-v[1], v[0]}; }
LatticeVector negated(LatticeVector v) {
  for (auto& x : v) x = -x;
  return v;
}

RatVector to_rat(const LatticeVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<long>(v[i]);
  return r;
}

// Canonical generators of a planar cone from distinct primitive generators.
std::vector<LatticeVector> reduce_planar(std::vector<LatticeVector> g) {
  if (g.size() <= 1) return g;
  std::sort(g.begin(), g.end(), angle_less<LatticeVector>);
  const std::size_t k = g.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = g[i];
    const auto& b = g[(i + 1) % k];
    if (cross(a, b) < 0 || (k == 1)) return {a, b};  // gap wider than π: pointed sector
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = g[i];
    const auto& b = g[(i + 1) % k];
    if (cross(a, b) == 0) {  // gap of exactly π
      if (k == 2) return {a, b};
      return {a, b, rot90(b)};
    }
  }
  return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
}

}  // namespace

Cone make_cone(std::vector<RatVector> generators, std::size_t ambient) {
  std::set<LatticeVector> prim;
  for (const auto& g : generators) {
    if (g.size() != ambient) throw Error(ErrorCode::InputError, "cone generator has wrong dimension");
    bool zero = std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; });
    if (!zero) prim.insert(primitive_decomposition(g).direction);
  }
  std::vector<LatticeVector> gens(prim.begin(), prim.end());
  if (ambient == 2) gens = reduce_planar(std::move(gens));
  std::sort(gens.begin(), gens.end());
  Cone c;
  c.generators = gens;
  c.dim = gens.empty() ? 0 : lattice::rank(lattice::IntMatrix::from_columns(ambient, gens));
  return c;
}

Cone cone_over(const Polyhedron& cell) {
  if (cell.vertices.empty()) throw Error(ErrorCode::InputError, "cone over an empty cell");
  const std::size_t n = cell.vertices.front().size();
  std::vector<RatVector> gens;
  for (const auto& p : cell.vertices) {
    RatVector g = p;
    g.push_back(Rational(1));
    gens.push_back(std::move(g));
  }
  for (const auto& r : cell.rays) {
    RatVector g = to_rat(r);
    g.push_back(Rational(0));
    gens.push_back(std::move(g));
  }
  return make_cone(std::move(gens), n + 1);
}

Fan asymptotic_fan(const PolyhedralDecomposition& p) {
  std::set<Cone> cones;
  cones.insert(make_cone({}, p.n));
  for (const auto& cell : p.cells) {
    std::vector<RatVector> rays;
    for (const auto& r : cell.rays) rays.push_back(to_rat(r));
    cones.insert(make_cone(std::move(rays), p.n));
  }
  return Fan{std::vector<Cone>(cones.begin(), cones.end())};
}

// ------------------------------------------------------------ goodness

namespace {

Rational dot(const RatVector& a, const LatticeVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<long>(u[i]);
  return s;
}

long norm2(const LatticeVector& u) {
  long s = 0;
  for (auto x : u) s += x * x;
  return s;
}

// Linear piece start + t·dir for t in [lo, hi]; nullopt bounds are infinite.
struct Piece {
  RatVector start;
  LatticeVector dir;
  std::optional<Rational> lo, hi;
  int source = -1;  // curve index, or -1 - constraint index

  RatVector at(const Rational& t) const {
    RatVector p = start;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += t * static_cast<long>(dir[i]);
    return p;
  }
  bool contains_param(const Rational& t) const { return (!lo || *lo <= t) && (!hi || t <= *hi); }
};

// Parameter of x on the line of p, if x lies on that line.
std::optional<Rational> param_on_line(const Piece& p, const RatVector& x) {
  const RatVector d = x - p.start;
  const Rational t = dot(d, p.dir) / norm2(p.dir);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != t * static_cast<long>(p.dir[i])) return std::nullopt;
  return t;
}

Piece edge_piece(const TropicalCurve& c, const Edge& e, int source) {
  Piece p{c.positions[e.tail], e.direction, Rational(0), std::nullopt, source};
  if (e.bounded()) p.hi = lattice_length(c.positions[e.head] - c.positions[e.tail]);
  return p;
}

// One-cells of a decomposition as pieces.
std::vector<Piece> one_cells(const PolyhedralDecomposition& p) {
  std::vector<Piece> out;
  for (const auto& cell : p.cells) {
    if (cell.dim != 1) continue;
    if (cell.vertices.size() == 2) {
      const auto pd = primitive_decomposition(cell.vertices[1] - cell.vertices[0]);
      out.push_back({cell.vertices[0], pd.direction, Rational(0), pd.scale, -1});
    } else if (cell.vertices.size() == 1 && cell.rays.size() == 1) {
      out.push_back({cell.vertices[0], cell.rays[0], Rational(0), std::nullopt, -1});
    } else if (cell.vertices.size() == 1 && cell.rays.size() == 2) {  // a full line
      out.push_back({cell.vertices[0], cell.rays[0], std::nullopt, std::nullopt, -1});
    }
  }
  return out;
}

// Is the parameter range of `target` covered by the union of the collinear cells?
bool covered(const Piece& target, const std::vector<Piece>& cells) {
  struct Interval {
    std::optional<Rational> lo, hi;
  };
  std::vector<Interval> parts;
  for (const auto& c : cells) {
    const bool parallel = c.dir == target.dir || c.dir == negated(target.dir);
    if (!parallel) continue;
    const auto t0 = param_on_line(target, c.start);
    if (!t0) continue;
    const int sgn = c.dir == target.dir ? 1 : -1;
    auto map = [&](const std::optional<Rational>& s) -> std::optional<Rational> {
      if (!s) return std::nullopt;
      return *t0 + sgn * *s;
    };
    Interval iv;
    if (sgn > 0) {
      iv.lo = map(c.lo);
      iv.hi = map(c.hi);
    } else {
      iv.lo = map(c.hi);
      iv.hi = map(c.lo);
    }
    parts.push_back(iv);
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (!a.lo) return static_cast<bool>(b.lo);
    if (!b.lo) return false;
    return *a.lo < *b.lo;
  });
  // Sweep from target.lo.
  std::optional<Rational> reach = target.lo;  // nullopt means -∞ must be covered
  bool reached_minus_inf = !target.lo;
  bool started = false;
  for (const auto& iv : parts) {
    if (!started) {
      if (reached_minus_inf) {
        if (iv.lo) return false;
      } else if (iv.lo && *iv.lo > *reach) {
        return false;
      }
      started = true;
      if (!iv.hi) return true;
      reach = iv.hi;
      if (target.hi && *reach >= *target.hi) return true;
      continue;
    }
    if (iv.lo && *iv.lo > *reach) return false;
    if (!iv.hi) return true;
    if (*iv.hi > *reach) reach = iv.hi;
    if (target.hi && *reach >= *target.hi) return true;
  }
  return started && target.hi && *reach >= *target.hi;
}

bool integral(const RatVector& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.get_den() == 1; });
}

}  // namespace

GoodnessReport validate_good(const PolyhedralDecomposition& p, const std::vector<TropicalCurve>& curves,
                             const std::vector<AffineConstraint>& constraints) {
  GoodnessReport report;
  std::set<RatVector> zero_cells;
  for (const auto& cell : p.cells)
    if (cell.dim == 0 && !cell.vertices.empty()) {
      zero_cells.insert(cell.vertices[0]);
      if (!integral(cell.vertices[0])) ++report.non_integral_zero_cells;
    }
  const std::vector<Piece> skeleton = one_cells(p);

  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& c = curves[ci];
    const int cid = static_cast<int>(ci);
    for (int v = 0; v < c.graph.vertex_count; ++v)
      if (!zero_cells.count(c.positions[v]))
        report.violations.push_back({1, cid, -1, v, -1, "vertex image is not a 0-cell"});
    for (std::size_t ei = 0; ei < c.graph.edges.size(); ++ei) {
      const Edge& e = c.graph.edges[ei];
      const int eid = static_cast<int>(ei);
      if (!covered(edge_piece(c, e, cid), skeleton))
        report.violations.push_back({1, cid, eid, -1, -1, "edge image is not in the 1-skeleton"});
      if (e.bounded()) {
        const Rational q = lattice_length(c.positions[e.head] - c.positions[e.tail]) / e.weight;
        if (q.get_den() != 1)
          report.violations.push_back({3, cid, eid, -1, -1, "weight does not divide the lattice length"});
      }
    }
    for (std::size_t j = 0; j < constraints.size(); ++j) {
      const int jid = static_cast<int>(j);
      for (int v = 0; v < c.graph.vertex_count; ++v)
        if (point_in_constraint(c.positions[v], constraints[j]) && !zero_cells.count(c.positions[v]))
          report.violations.push_back({2, cid, -1, v, jid, "constraint point at a vertex is not a 0-cell"});
      for (std::size_t ei = 0; ei < c.graph.edges.size(); ++ei) {
        const auto meet = edge_meets_constraint(c, static_cast<int>(ei), constraints[j]);
        if (meet.kind == EdgeMeet::Kind::Whole)
          report.violations.push_back({2, cid, static_cast<int>(ei), -1, jid, "edge lies inside the constraint"});
        else if (meet.kind == EdgeMeet::Kind::Point && !zero_cells.count(meet.point))
          report.violations.push_back({2, cid, static_cast<int>(ei), -1, jid, "intersection point is not a 0-cell"});
      }
    }
  }
  return report;
}

Integer rescale_for_goodness(const std::vector<TropicalCurve>& curves,
                             const std::vector<AffineConstraint>& constraints) {
  Integer s = 1;
  auto absorb = [&](const RatVector& p) {
    for (const auto& x : p) s = lcm(s, Integer(x.get_den()));
  };
  for (const auto& c : curves) {
    for (const auto& p : c.positions) absorb(p);
    for (const auto& e : c.graph.edges) {
      if (!e.bounded()) continue;
      // s·len ∈ wZ  ⇔  (den·w / gcd(num, den·w)) | s
      const Rational len = lattice_length(c.positions[e.head] - c.positions[e.tail]);
      const Integer dw = len.get_den() * e.weight;
      s = lcm(s, dw / gcd(len.get_num(), dw));
    }
  }
  for (const auto& a : constraints) absorb(a.base);
  return s;
}

// ------------------------------------------------------------ planar overlay

namespace {

using Point = RatVector;

struct HalfEdge {
  int from;       // vertex id, or -1 for the point at infinity
  int to;         // vertex id, or -1
  int one_cell;   // id among the 1-cells
  int ray = -1;   // index into the ray list when incident to infinity
  LatticeVector out_dir;  // primitive direction leaving `from` (finite from only)
  RatVector out_vec;      // exact direction vector leaving `from`
};

}  // namespace

PolyhedralDecomposition build_decomposition_2d(const std::vector<TropicalCurve>& curves,
                                               const std::vector<AffineConstraint>& constraints) {
  PolyhedralDecomposition out;
  out.n = 2;

  std::vector<Piece> pieces;
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& c = curves[ci];
    if (c.n != 2) throw Error(ErrorCode::InputError, "planar decomposition needs planar curves");
    for (const auto& e : c.graph.edges) pieces.push_back(edge_piece(c, e, static_cast<int>(ci)));
  }
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const auto& a = constraints[j];
    if (a.base.size() != 2) throw Error(ErrorCode::InputError, "planar decomposition needs planar constraints");
    if (a.codim == 1) {
      LatticeVector d{a.directions(0, 0).get_si(), a.directions(1, 0).get_si()};
      pieces.push_back({a.base, d, std::nullopt, std::nullopt, -1 - static_cast<int>(j)});
    }
  }

  if (pieces.empty()) {
    out.cells.push_back({{{Rational(0), Rational(0)}}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, 2});
    out.facets.push_back({});
    return out;
  }

  // Split parameters per piece.
  std::vector<std::set<Rational>> cuts(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].lo) cuts[i].insert(*pieces[i].lo);
    if (pieces[i].hi) cuts[i].insert(*pieces[i].hi);
  }
  auto add_point = [&](const Point& x) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto t = param_on_line(pieces[i], x);
      if (t && pieces[i].contains_param(*t)) cuts[i].insert(*t);
    }
  };
  for (const auto& c : curves)
    for (const auto& p : c.positions) add_point(p);
  for (const auto& a : constraints)
    if (a.codim == 2) add_point(a.base);

  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece& p = pieces[i];
      const Piece& q = pieces[j];
      const std::int64_t det = cross(p.dir, q.dir);
      const RatVector d = q.start - p.start;
      if (det == 0) {
        const auto t0 = param_on_line(p, q.start);
        if (!t0) continue;
        // Collinear: compare parameter ranges on p's line.
        const int sgn = q.dir == p.dir ? 1 : -1;
        std::optional<Rational> lo, hi;
        auto conv = [&](const std::optional<Rational>& s) -> std::optional<Rational> {
          if (!s) return std::nullopt;
          return *t0 + sgn * *s;
        };
        if (sgn > 0) {
          lo = conv(q.lo);
          hi = conv(q.hi);
        } else {
          lo = conv(q.hi);
          hi = conv(q.lo);
        }
        // Overlap length of [p.lo,p.hi] and [lo,hi].
        std::optional<Rational> a = p.lo, b = p.hi;
        if (lo && (!a || *lo > *a)) a = lo;
        if (hi && (!b || *hi < *b)) b = hi;
        if (!a || !b || *a < *b)
          throw Error(ErrorCode::NonGenericInput, "two pieces of the overlay share a segment");
        if (*a == *b) {  // touching end to end
          cuts[i].insert(*a);
          cuts[j].insert(sgn * (*a - *t0));
        }
        continue;
      }
      const Rational t = cross(d, to_rat(q.dir)) / det;
      const Rational s = cross(d, to_rat(p.dir)) / det;
      if (p.contains_param(t) && q.contains_param(s)) {
        cuts[i].insert(t);
        cuts[j].insert(s);
      }
    }

  // Vertices and 1-cells.
  std::map<Point, int> vid;
  std::vector<Point> verts;
  auto vertex = [&](const Point& x) {
    auto [it, fresh] = vid.emplace(x, static_cast<int>(verts.size()));
    if (fresh) verts.push_back(x);
    return it->second;
  };
  struct Ray {
    int vertex;
    LatticeVector dir;
  };
  std::vector<std::pair<int, int>> segments;
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (cuts[i].empty()) cuts[i].insert(Rational(0));
    std::vector<Rational> ts(cuts[i].begin(), cuts[i].end());
    std::vector<int> ids;
    for (const auto& t : ts) ids.push_back(vertex(p.at(t)));
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) segments.emplace_back(ids[k], ids[k + 1]);
    if (!p.hi) rays.push_back({ids.back(), p.dir});
    if (!p.lo) rays.push_back({ids.front(), negated(p.dir)});
  }

  for (const auto& v : verts) {
    out.cells.push_back({{v}, {}, 0});
    out.facets.push_back({});
  }
  const int first_one_cell = static_cast<int>(out.cells.size());

  std::vector<HalfEdge> half;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const auto [a, b] = segments[k];
    const int cell = first_one_cell + static_cast<int>(k);
    out.cells.push_back({{verts[a], verts[b]}, {}, 1});
    out.facets.push_back({a, b});
    const RatVector ab = verts[b] - verts[a];
    const LatticeVector u = primitive_decomposition(ab).direction;
    half.push_back({a, b, cell, -1, u, ab});
    half.push_back({b, a, cell, -1, negated(u), verts[a] - verts[b]});
  }
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const auto& r = rays[k];
    const int cell = static_cast<int>(out.cells.size());
    out.cells.push_back({{verts[r.vertex]}, {r.dir}, 1});
    out.facets.push_back({r.vertex});
    half.push_back({r.vertex, -1, cell, static_cast<int>(k), r.dir, to_rat(r.dir)});
    half.push_back({-1, r.vertex, cell, static_cast<int>(k), negated(r.dir), {}});
  }
  const std::size_t h_count = half.size();
  auto twin = [](std::size_t h) { return h ^ 1u; };

  // CCW order of outgoing half-edges at each finite vertex.
  std::vector<std::vector<std::size_t>> around(verts.size());
  for (std::size_t h = 0; h < h_count; ++h)
    if (half[h].from >= 0) around[half[h].from].push_back(h);
  std::vector<std::size_t> slot(h_count, 0);
  for (auto& list : around) {
    std::sort(list.begin(), list.end(),
              [&](std::size_t a, std::size_t b) { return angle_less(half[a].out_vec, half[b].out_vec); });
    for (std::size_t k = 0; k < list.size(); ++k) slot[list[k]] = k;
  }
  // Rays at infinity by angle, then by offset to the left of the direction.
  std::vector<std::size_t> ray_order(rays.size());
  for (std::size_t k = 0; k < rays.size(); ++k) ray_order[k] = k;
  auto offset = [&](std::size_t k) { return dot(verts[rays[k].vertex], rot90(rays[k].dir)); };
  std::sort(ray_order.begin(), ray_order.end(), [&](std::size_t a, std::size_t b) {
    if (rays[a].dir != rays[b].dir) return angle_less(rays[a].dir, rays[b].dir);
    return offset(a) < offset(b);
  });
  std::vector<std::size_t> ray_rank(rays.size());
  for (std::size_t k = 0; k < ray_order.size(); ++k) ray_rank[ray_order[k]] = k;
  const std::size_t ray_half_base = 2 * segments.size();

  auto next = [&](std::size_t h) -> std::size_t {
    if (half[h].to < 0) {
      const std::size_t succ = ray_order[(ray_rank[half[h].ray] + 1) % rays.size()];
      return ray_half_base + 2 * succ + 1;  // inward half of the successor ray
    }
    const std::size_t t = twin(h);
    const auto& list = around[half[t].from];
    return list[(slot[t] + list.size() - 1) % list.size()];
  };

  std::vector<bool> seen(h_count, false);
  for (std::size_t start = 0; start < h_count; ++start) {
    if (seen[start]) continue;
    Polyhedron face;
    face.dim = 2;
    std::vector<int> facet_ids;
    std::vector<RatVector> recession;
    std::set<int> face_verts;
    std::size_t h = start;
    do {
      seen[h] = true;
      facet_ids.push_back(half[h].one_cell);
      if (half[h].from >= 0 && face_verts.insert(half[h].from).second) face.vertices.push_back(verts[half[h].from]);
      if (half[h].to < 0) {
        // Arc at infinity from this ray to the successor's direction (CCW).
        const LatticeVector d1 = rays[half[h].ray].dir;
        const std::size_t nx = next(h);
        const LatticeVector d2 = rays[half[nx].ray].dir;
        recession.push_back(to_rat(d1));
        recession.push_back(to_rat(d2));
        if (cross(d1, d2) < 0 || (cross(d1, d2) == 0 && d1 != d2)) recession.push_back(to_rat(rot90(d1)));
        if (cross(d1, d2) < 0) recession.push_back(to_rat(negated(d1)));
      }
      h = next(h);
    } while (h != start);
    face.rays = make_cone(std::move(recession), 2).generators;
    std::sort(facet_ids.begin(), facet_ids.end());
    facet_ids.erase(std::unique(facet_ids.begin(), facet_ids.end()), facet_ids.end());
    out.cells.push_back(std::move(face));
    out.facets.push_back(std::move(facet_ids));
  }
  return out;
}

}  // namespace tropcount
