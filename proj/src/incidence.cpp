#include "tropcount/incidence.hpp"

#include <string>

namespace tropcount {

using lattice::IntMatrix;

AffineConstraint AffineConstraint::point(RatVector p) {
  AffineConstraint a;
  a.codim = p.size();
  a.directions = IntMatrix(p.size(), 0);
  a.base = std::move(p);
  return a;
}

AffineConstraint AffineConstraint::make(RatVector base, const IntMatrix& directions) {
  AffineConstraint a;
  const std::size_t n = base.size();
  if (directions.cols() != 0 && directions.rows() != n)
    throw Error(ErrorCode::InputError, "constraint directions do not match the base point dimension");
  a.directions = lattice::saturate(directions, n);
  a.codim = n - a.directions.cols();
  a.base = std::move(base);
  return a;
}

RealPointConfig RealPointConfig::all_positive(std::size_t count, std::size_t n) {
  RealPointConfig c;
  c.signs.assign(count, std::vector<int>(n, 1));
  return c;
}

bool check_generality_dims(std::int64_t genus, const Degree& degree,
                           const std::vector<AffineConstraint>& constraints, std::size_t n) {
  std::int64_t sum = 0;
  for (const auto& a : constraints) sum += static_cast<std::int64_t>(a.codim) - 1;
  const std::int64_t expected = (static_cast<std::int64_t>(n) - 3) * (1 - genus) + degree.cardinality();
  if (sum != expected) return false;
  // ∩ L(A_j) == 0 iff the stacked quotient projections have rank n.
  IntMatrix stacked;
  for (const auto& a : constraints) stacked = stacked.vconcat(lattice::quotient_basis(a.directions, n).projection);
  return stacked.rows() > 0 && lattice::rank(stacked) == n;
}

int minus_vertex(const TropicalCurve& c, int edge) {
  const Edge& e = c.graph.edges.at(edge);
  if (!e.bounded()) return e.tail;
  return lex_less(c.positions[e.head], c.positions[e.tail]) ? e.head : e.tail;
}

LatticeVector direction_from_minus(const TropicalCurve& c, int edge) {
  const Edge& e = c.graph.edges.at(edge);
  if (!e.bounded() || minus_vertex(c, edge) == e.tail) return e.direction;
  LatticeVector u = e.direction;
  for (auto& x : u) x = -x;
  return u;
}

bool point_in_constraint(const RatVector& p, const AffineConstraint& a) {
  const std::size_t n = a.base.size();
  const std::size_t k = a.directions.cols();
  std::vector<RatVector> m(n, RatVector(k));
  RatVector rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = a.directions(r, c);
    rhs[r] = p[r] - a.base[r];
  }
  if (k == 0) {
    for (const auto& x : rhs)
      if (x != 0) return false;
    return true;
  }
  return lattice::solve_rational(m, rhs).has_value();
}

EdgeMeet edge_meets_constraint(const TropicalCurve& c, int edge, const AffineConstraint& a) {
  const Edge& e = c.graph.edges.at(edge);
  const std::size_t n = c.n;
  const std::size_t k = a.directions.cols();
  const RatVector& start = c.positions[e.tail];
  std::vector<RatVector> m(n, RatVector(k + 1));
  RatVector rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    m[r][0] = static_cast<long>(e.direction[r]);
    for (std::size_t j = 0; j < k; ++j) m[r][j + 1] = -a.directions(r, j);
    rhs[r] = a.base[r] - start[r];
  }
  const auto sol = lattice::solve_rational(m, rhs);
  if (!sol) return {EdgeMeet::Kind::None, {}};
  // A direction inside L(A) with a solution means the whole line lies in A.
  bool t_free = false;
  if (!sol->unique) {
    std::vector<RatVector> l(n, RatVector(k));
    RatVector u(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < k; ++j) l[r][j] = a.directions(r, j);
      u[r] = static_cast<long>(e.direction[r]);
    }
    t_free = k > 0 && lattice::solve_rational(l, u).has_value();
  }
  if (t_free) return {EdgeMeet::Kind::Whole, {}};
  const Rational& t = sol->x[0];
  if (t <= 0) return {EdgeMeet::Kind::None, {}};
  if (e.bounded() && t >= lattice_length(c.positions[e.head] - start)) return {EdgeMeet::Kind::None, {}};
  RatVector p = start;
  for (std::size_t r = 0; r < n; ++r) p[r] += t * static_cast<long>(e.direction[r]);
  return {EdgeMeet::Kind::Point, std::move(p)};
}

std::vector<int> match_marked_edges(const TropicalCurve& c, const std::vector<AffineConstraint>& constraints) {
  std::vector<int> out;
  out.reserve(constraints.size());
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const auto& a = constraints[j];
    if (a.base.size() != c.n) throw Error(ErrorCode::InputError, "constraint dimension mismatch");
    const std::string tag = "constraint " + std::to_string(j);
    for (int v = 0; v < c.graph.vertex_count; ++v)
      if (point_in_constraint(c.positions[v], a))
        throw Error(ErrorCode::ConstraintOnVertex, tag + " contains vertex " + std::to_string(v));
    int hit = -1;
    for (std::size_t i = 0; i < c.graph.edges.size(); ++i) {
      const auto m = edge_meets_constraint(c, static_cast<int>(i), a).kind;
      if (m == EdgeMeet::Kind::None) continue;
      if (m == EdgeMeet::Kind::Whole) throw Error(ErrorCode::NonGenericInput, tag + " contains edge " + std::to_string(i));
      if (hit >= 0)
        throw Error(ErrorCode::NonGenericInput,
                    tag + " meets edges " + std::to_string(hit) + " and " + std::to_string(i));
      hit = static_cast<int>(i);
    }
    if (hit < 0) throw Error(ErrorCode::ConstraintMissed, tag + " meets no edge");
    out.push_back(hit);
  }
  return out;
}

LatticeMapTh build_T_h(const TropicalCurve& c, const std::vector<AffineConstraint>& constraints,
                       const std::vector<int>& marks) {
  if (marks.size() != constraints.size())
    throw Error(ErrorCode::InputError, "one marked edge per constraint required");
  const std::size_t n = c.n;
  const std::size_t cols = n * static_cast<std::size_t>(c.graph.vertex_count);
  LatticeMapTh t;
  for (int v = 0; v < c.graph.vertex_count; ++v)
    for (std::size_t k = 0; k < n; ++k) t.col_labels.push_back({v, static_cast<int>(k)});

  std::vector<std::vector<Integer>> rows;
  auto add_rows = [&](const IntMatrix& proj, int plus, int minus, ThRowLabel::Kind kind, int index) {
    for (std::size_t r = 0; r < proj.rows(); ++r) {
      std::vector<Integer> row(cols);
      for (std::size_t k = 0; k < n; ++k) {
        if (plus >= 0) row[plus * n + k] += proj(r, k);
        if (minus >= 0) row[minus * n + k] -= proj(r, k);
      }
      rows.push_back(std::move(row));
      t.row_labels.push_back({kind, index, static_cast<int>(r)});
    }
  };

  for (std::size_t i = 0; i < c.graph.edges.size(); ++i) {
    const Edge& e = c.graph.edges[i];
    if (!e.bounded()) continue;
    const int id = static_cast<int>(i);
    const int minus = minus_vertex(c, id);
    const int plus = minus == e.tail ? e.head : e.tail;
    const LatticeVector u = direction_from_minus(c, id);
    auto qb = lattice::quotient_basis(IntMatrix::from_columns(n, {u}), n);
    add_rows(qb.projection, plus, minus, ThRowLabel::Kind::Edge, id);
    t.edge_ids.push_back(id);
    t.orientation.emplace_back(minus, plus);
    t.edge_bases.push_back(std::move(qb));
  }
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const int e = marks[j];
    const int minus = minus_vertex(c, e);
    const LatticeVector u = direction_from_minus(c, e);
    IntMatrix gens = IntMatrix::from_columns(n, {u}).hconcat(constraints[j].directions);
    auto qb = lattice::quotient_basis(lattice::saturate(gens, n), n);
    add_rows(qb.projection, minus, -1, ThRowLabel::Kind::Constraint, static_cast<int>(j));
    t.constraint_vertex.push_back(minus);
    t.constraint_bases.push_back(std::move(qb));
  }

  t.matrix = IntMatrix(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < cols; ++k) t.matrix(r, k) = rows[r][k];
  return t;
}

IntMatrix build_constraint_inclusion(const LatticeVector& u, const AffineConstraint& a) {
  const std::size_t n = u.size();
  if (!is_primitive(u)) throw Error(ErrorCode::InputError, "marked direction must be primitive");
  const IntMatrix gens = IntMatrix::from_columns(n, {u}).hconcat(a.directions);
  const IntMatrix sat = lattice::saturate(gens, n);
  std::vector<RatVector> basis(n, RatVector(sat.cols()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < sat.cols(); ++c) basis[r][c] = sat(r, c);
  IntMatrix out(sat.cols(), gens.cols());
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    RatVector rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = gens(r, c);
    const auto sol = lattice::solve_rational(basis, rhs);
    if (!sol || !sol->unique) throw Error(ErrorCode::InternalMismatch, "generator outside its saturation");
    for (std::size_t r = 0; r < sat.cols(); ++r) {
      if (sol->x[r].get_den() != 1) throw Error(ErrorCode::InternalMismatch, "saturation basis is not integral");
      out(r, c) = sol->x[r].get_num();
    }
  }
  return out;
}

SignClass sigma_sign_class(const LatticeMapTh& t, const std::vector<AffineConstraint>& constraints,
                           const RealPointConfig& config, int sign_t) {
  if (config.signs.size() != constraints.size())
    throw Error(ErrorCode::InputError, "one sign vector per constraint required");
  if (sign_t != 1 && sign_t != -1) throw Error(ErrorCode::InputError, "sign_t must be +1 or -1");
  SignClass s{lattice::BitVector(t.matrix.rows())};
  std::size_t row = 0;
  while (row < t.row_labels.size() && t.row_labels[row].kind == ThRowLabel::Kind::Edge) ++row;
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const auto& a = constraints[j];
    const auto& signs = config.signs[j];
    if (signs.size() != a.base.size()) throw Error(ErrorCode::InputError, "sign vector has wrong length");
    std::vector<int> b(a.base.size());
    for (std::size_t k = 0; k < a.base.size(); ++k) {
      if (a.base[k].get_den() != 1)
        throw Error(ErrorCode::NonIntegralBase, "base point of constraint " + std::to_string(j) + " is not integral");
      if (signs[k] != 1 && signs[k] != -1) throw Error(ErrorCode::InputError, "signs must be +1 or -1");
      int sgn = signs[k];
      if (sign_t < 0 && mpz_odd_p(a.base[k].get_num_mpz_t())) sgn = -sgn;
      b[k] = sgn < 0 ? 1 : 0;
    }
    const auto& proj = t.constraint_bases.at(j).projection;
    for (std::size_t r = 0; r < proj.rows(); ++r, ++row) {
      int acc = 0;
      for (std::size_t k = 0; k < proj.cols(); ++k)
        if (b[k] && mpz_odd_p(proj(r, k).get_mpz_t())) acc ^= 1;
      s.bits.set(row, acc != 0);
    }
  }
  return s;
}

AffineConstraint scaled(const AffineConstraint& a, const Rational& s) {
  AffineConstraint out = a;
  for (auto& x : out.base) x *= s;
  return out;
}

}  // namespace tropcount
