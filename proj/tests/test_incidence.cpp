#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "tropcount/incidence.hpp"

using namespace tropcount;
using fixtures::pt;
using lattice::IntMatrix;

namespace {

std::vector<Integer> factors(const IntMatrix& m) { return lattice::smith_normal_form(m).invariant_factors; }

AffineConstraint line_constraint(RatVector base, LatticeVector dir) {
  return AffineConstraint::make(std::move(base), IntMatrix::from_columns(2, {dir}));
}

}  // namespace

TEST_CASE("dimension count and translation test") {
  const Degree d1 = projective_degree(1);
  const std::vector<AffineConstraint> two = {AffineConstraint::point(pt(-3, 0)), AffineConstraint::point(pt(0, -5))};
  CHECK(check_generality_dims(0, d1, two, 2));
  auto three = two;
  three.push_back(AffineConstraint::point(pt(4, 4)));
  CHECK_FALSE(check_generality_dims(0, d1, three, 2));
  const std::vector<AffineConstraint> parallel = {line_constraint(pt(0, 0), {1, 0}), line_constraint(pt(0, 1), {1, 0})};
  CHECK_FALSE(check_generality_dims(0, d1, parallel, 2));
  // Transverse lines pass the translation test but not the count.
  const std::vector<AffineConstraint> crossing = {line_constraint(pt(0, 0), {1, 0}), line_constraint(pt(0, 1), {0, 1})};
  CHECK_FALSE(check_generality_dims(0, d1, crossing, 2));
}

TEST_CASE("constraint directions are saturated") {
  const auto a = AffineConstraint::make(pt(0, 0), IntMatrix::from_columns(2, {{2, 4}}));
  CHECK(a.codim == 1);
  CHECK(a.directions(0, 0) * a.directions(0, 0) + a.directions(1, 0) * a.directions(1, 0) == 5);
}

TEST_CASE("marked edges of the line") {
  const auto c = fixtures::line();
  CHECK(match_marked_edges(c, {AffineConstraint::point(pt(-3, 0)), AffineConstraint::point(pt(0, -5))}) ==
        std::vector<int>{0, 1});
  CHECK(match_marked_edges(c, {AffineConstraint::point(pt(1, 1))}) == std::vector<int>{2});
  try {
    match_marked_edges(c, {AffineConstraint::point(pt(5, 7))});
    FAIL("expected ConstraintMissed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstraintMissed);
  }
  try {
    match_marked_edges(c, {AffineConstraint::point(pt(0, 0))});
    FAIL("expected ConstraintOnVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConstraintOnVertex);
  }
  // A line constraint containing a whole ray is ambiguous.
  CHECK_THROWS_AS(match_marked_edges(c, {line_constraint(pt(-1, 0), {1, 0})}), Error);
  // The line y = -2 meets only the downward ray.
  CHECK(match_marked_edges(c, {line_constraint(pt(3, -2), {1, 0})}) == std::vector<int>{1});
}

TEST_CASE("T_h of the line through two points") {
  const auto c = fixtures::line();
  const std::vector<AffineConstraint> a = {AffineConstraint::point(pt(-3, 0)), AffineConstraint::point(pt(0, -5))};
  const auto t = build_T_h(c, a, {0, 1});
  REQUIRE(t.square());
  CHECK(t.matrix.rows() == 2);
  CHECK(abs(lattice::determinant(t.matrix)) == 1);
  CHECK(t.edge_ids.empty());
  CHECK(t.constraint_vertex == std::vector<int>{0, 0});
}

TEST_CASE("T_h is unchanged in edge blocks by lattice translation") {
  auto c = fixtures::two_vertex(1);
  const std::vector<AffineConstraint> a = {AffineConstraint::point(pt(0, 3)), AffineConstraint::point(pt(1, 0)),
                                           AffineConstraint::point(pt(3, 1))};
  const std::vector<int> marks = {1, 0, 4};
  const auto t = build_T_h(c, a, marks);
  const auto moved = translated(c, pt(5, -7));
  std::vector<AffineConstraint> moved_a;
  for (const auto& x : a) moved_a.push_back(AffineConstraint::point(x.base + pt(5, -7)));
  const auto t2 = build_T_h(moved, moved_a, marks);
  REQUIRE(t.matrix.rows() == t2.matrix.rows());
  for (std::size_t r = 0; r < t.row_labels.size(); ++r)
    if (t.row_labels[r].kind == ThRowLabel::Kind::Edge)
      for (std::size_t k = 0; k < t.matrix.cols(); ++k) CHECK(t.matrix(r, k) == t2.matrix(r, k));
}

TEST_CASE("T_h factors do not depend on orientation or vertex order") {
  const auto c = fixtures::two_vertex(2);
  const std::vector<AffineConstraint> a = {AffineConstraint::point(pt(0, 3)), AffineConstraint::point(pt(1, 0)),
                                           AffineConstraint::point(pt(3, 1))};
  const std::vector<int> marks = {1, 0, 4};
  const auto base = factors(build_T_h(c, a, marks).matrix);

  // Swap the two vertices and reverse the bounded edge.
  TropicalCurve s = c;
  s.positions = {c.positions[1], c.positions[0]};
  for (auto& e : s.graph.edges) {
    if (e.bounded()) {
      e = {0, 1, {-1, 0}, e.weight};
      continue;
    }
    e.tail = 1 - e.tail;
  }
  CHECK(check_balancing(s).empty());
  CHECK(factors(build_T_h(s, a, marks).matrix) == base);

  // Negating edge rows is an orientation flip.
  auto t = build_T_h(c, a, marks);
  for (std::size_t r = 0; r < t.row_labels.size(); ++r)
    if (t.row_labels[r].kind == ThRowLabel::Kind::Edge)
      for (std::size_t k = 0; k < t.matrix.cols(); ++k) t.matrix(r, k) = -t.matrix(r, k);
  CHECK(factors(t.matrix) == base);
}

TEST_CASE("T_h evaluates to the constraint classes on true positions") {
  const auto c = fixtures::two_vertex(1);
  const std::vector<AffineConstraint> a = {AffineConstraint::point(pt(0, 3)), AffineConstraint::point(pt(1, 0)),
                                           AffineConstraint::point(pt(3, 1))};
  const std::vector<int> marks = {1, 0, 4};
  REQUIRE(match_marked_edges(c, a) == marks);
  const auto t = build_T_h(c, a, marks);
  std::vector<Integer> phi;
  for (const auto& p : c.positions)
    for (const auto& x : p) phi.push_back(x.get_num());
  std::size_t row = 0;
  for (; row < t.row_labels.size() && t.row_labels[row].kind == ThRowLabel::Kind::Edge; ++row) {
    Integer acc = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) acc += t.matrix(row, k) * phi[k];
    CHECK(acc == 0);
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& proj = t.constraint_bases[j].projection;
    for (std::size_t r = 0; r < proj.rows(); ++r, ++row) {
      Integer acc = 0, expect = 0;
      for (std::size_t k = 0; k < phi.size(); ++k) acc += t.matrix(row, k) * phi[k];
      for (std::size_t k = 0; k < 2; ++k) expect += proj(r, k) * a[j].base[k].get_num();
      CHECK(acc == expect);
    }
  }
}

TEST_CASE("constraint inclusion indices") {
  auto index = [](const IntMatrix& m) {
    Integer d = 1;
    for (const auto& f : factors(m)) d *= f;
    return d;
  };
  CHECK(index(build_constraint_inclusion({-1, 0}, AffineConstraint::point(pt(0, 0)))) == 1);
  const auto a3 = AffineConstraint::make({0, 0, 0}, IntMatrix::from_columns(3, {{0, 0, 1}}));
  CHECK(index(build_constraint_inclusion({1, 1, 0}, a3)) == 1);
  const auto diag = build_constraint_inclusion({1, 1}, line_constraint(pt(0, 0), {1, -1}));
  CHECK(diag.rows() == 2);
  CHECK(diag.cols() == 2);
  CHECK(index(diag) == 2);
  CHECK_THROWS_AS(build_constraint_inclusion({2, 2}, AffineConstraint::point(pt(0, 0))), Error);
}

TEST_CASE("sign classes of real point data") {
  const auto c = fixtures::line(1, 0);
  const std::vector<AffineConstraint> a = {AffineConstraint::point(pt(0, 0)), AffineConstraint::point(pt(1, -5))};
  const std::vector<int> marks = {0, 1};
  REQUIRE(match_marked_edges(c, a) == marks);
  const auto t = build_T_h(c, a, marks);
  auto bits = [&](std::vector<std::vector<int>> s, int sign_t) {
    RealPointConfig cfg{std::move(s)};
    const auto sc = sigma_sign_class(t, a, cfg, sign_t);
    std::vector<int> out;
    for (std::size_t i = 0; i < sc.bits.size(); ++i) out.push_back(sc.bits.get(i));
    return out;
  };
  CHECK(bits({{1, 1}, {1, 1}}, 1) == std::vector<int>{0, 0});
  // The first point's quotient keeps only its y sign, the second only its x sign.
  CHECK(bits({{-1, 1}, {1, 1}}, 1) == std::vector<int>{0, 0});
  CHECK(bits({{1, -1}, {1, 1}}, 1) == std::vector<int>{1, 0});
  CHECK(bits({{1, 1}, {-1, 1}}, 1) == std::vector<int>{0, 1});
  // sign_t twists coordinates with odd base entries: (1,-5) has both odd.
  CHECK(bits({{1, 1}, {1, 1}}, -1) == std::vector<int>{0, 1});
  CHECK(bits({{1, 1}, {-1, 1}}, -1) == std::vector<int>{0, 0});

  const std::vector<AffineConstraint> half = {AffineConstraint::point({Rational(1, 2), 0}),
                                              AffineConstraint::point(pt(1, -5))};
  try {
    sigma_sign_class(t, half, RealPointConfig::all_positive(2, 2), 1);
    FAIL("expected NonIntegralBase");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralBase);
  }
}

TEST_CASE("sign class is invariant under the quotiented subtorus") {
  // Multiplying P_j by the sign vector of its marked direction never changes sigma.
  std::mt19937_64 rng(11);
  const auto c = fixtures::two_vertex(1);
  const std::vector<AffineConstraint> a = {AffineConstraint::point(pt(0, 3)), AffineConstraint::point(pt(1, 0)),
                                           AffineConstraint::point(pt(3, 1))};
  const std::vector<int> marks = {1, 0, 4};
  const auto t = build_T_h(c, a, marks);
  for (int trial = 0; trial < 50; ++trial) {
    RealPointConfig cfg;
    for (std::size_t j = 0; j < 3; ++j) cfg.signs.push_back({rng() % 2 ? 1 : -1, rng() % 2 ? 1 : -1});
    const auto ref = sigma_sign_class(t, a, cfg, 1).bits;
    const std::size_t j = rng() % 3;
    const LatticeVector u = direction_from_minus(c, marks[j]);
    for (std::size_t k = 0; k < 2; ++k)
      if (u[k] % 2 != 0) cfg.signs[j][k] = -cfg.signs[j][k];
    CHECK(sigma_sign_class(t, a, cfg, 1).bits == ref);
  }
}
