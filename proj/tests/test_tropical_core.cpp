#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tropcount/tropical_core.hpp"

using namespace tropcount;
using fixtures::pt;

TEST_CASE("balancing") {
  CHECK(check_balancing(fixtures::line()).empty());
  CHECK(check_balancing(fixtures::star({{{-1, 0}, 3}, {{1, 2}, 1}, {{1, -1}, 2}})).empty());
  auto bad = check_balancing(fixtures::star({{{-1, 0}, 1}, {{0, -1}, 1}}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].sum == LatticeVector{-1, -1});

  auto c = fixtures::two_vertex(1);
  c.positions[1] = c.positions[0];
  CHECK_THROWS_AS(check_balancing(c), Error);
}

TEST_CASE("degree") {
  auto d = degree_of(fixtures::line());
  CHECK(d.cardinality() == 3);
  CHECK(d.entries.at({-1, 0}) == 1);
  CHECK(d.entries.at({1, 1}) == 1);

  auto w2 = degree_of(fixtures::star({{{1, 0}, 2}, {{-1, -1}, 1}, {{-1, 1}, 1}}));
  CHECK(w2.entries.count({2, 0}) == 1);
  CHECK(w2.entries.count({1, 0}) == 0);

  auto p3 = projective_degree(3);
  CHECK(p3.cardinality() == 9);
  CHECK(p3.entries.at({0, -1}) == 3);
  CHECK(degree_of(fixtures::line()) == projective_degree(1));

  // Translation invariance.
  auto c = fixtures::two_vertex(1);
  CHECK(degree_of(translated(c, {Rational(7, 3), Rational(-5)})) == degree_of(c));
}

TEST_CASE("genus") {
  CHECK(genus_of(fixtures::line().graph) == 0);
  TropicalGraph tri;
  tri.vertex_count = 3;
  tri.edges = {{0, 1, {1, 0}, 1}, {1, 2, {0, 1}, 1}, {2, 0, {-1, -1}, 1}};
  CHECK(genus_of(tri) == 1);
  TropicalGraph theta;
  theta.vertex_count = 2;
  theta.edges = {{0, 1, {1, 0}, 1}, {0, 1, {1, 0}, 1}, {0, 1, {1, 0}, 1}};
  CHECK(genus_of(theta) == 2);
}

TEST_CASE("moduli dimension") {
  CHECK(moduli_dimension(fixtures::line()) == 2);
  CHECK(is_non_superabundant(fixtures::line()));
  auto c = fixtures::two_vertex(1);
  CHECK(moduli_dimension(c) == 3);
  CHECK(is_non_superabundant(c));

  // A cycle: triangle with legs; closing the cycle removes 2 of 3 lengths.
  TropicalCurve cyc;
  cyc.n = 2;
  cyc.graph.vertex_count = 3;
  cyc.graph.edges = {
      {0, 1, {1, 0}, 1}, {1, 2, {-1, 1}, 1}, {0, 2, {0, 1}, 1},
      {0, -1, {-1, -1}, 1}, {1, -1, {1, -1}, 1}, {2, -1, {1, 1}, 1},
  };
  cyc.positions = {pt(0, 0), pt(1, 0), pt(0, 1)};
  validate_curve(cyc);
  CHECK(check_balancing(cyc).size() == 2);  // vertex 0 balances; dimension is defined anyway
  CHECK(moduli_dimension(cyc) == 2 + 3 - 2);
}

TEST_CASE("vertex multiplicities") {
  auto a = vertex_multiplicities(fixtures::line(), 0);
  CHECK(a.mult == 1);
  CHECK(a.triangle.interior == 0);
  CHECK(a.mult_r == 1);
  CHECK(a.mult_m == 1);

  auto b = vertex_multiplicities(fixtures::star({{{-1, 0}, 2}, {{1, -1}, 1}, {{1, 1}, 1}}), 0);
  CHECK(b.mult == 2);
  CHECK(b.triangle.interior == 0);
  CHECK(b.mult_r == 1);
  CHECK(b.mult_m == 0);

  auto c = vertex_multiplicities(fixtures::star({{{-1, 0}, 3}, {{1, 2}, 1}, {{1, -1}, 2}}), 0);
  CHECK(c.mult == 6);
  CHECK(c.triangle.interior == 1);
  CHECK(c.mult_r == -1);
  CHECK(c.mult_m == 0);

  auto three = vertex_multiplicities(fixtures::star({{{1, 0}, 1}, {{1, 3}, 1}, {{-2, -3}, 1}}), 0);
  CHECK(three.mult == 3);
  CHECK(three.mult_m == -1);

  CHECK_THROWS_AS(vertex_multiplicities(fixtures::star({{{1, 0}, 1}, {{-1, 0}, 1}}), 0), Error);
  try {
    vertex_multiplicities(fixtures::star({{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}), 0);
    FAIL("expected NonTrivalent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonTrivalent);
  }
}

TEST_CASE("pick matches brute force on random triples") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coord(-5, 5), weight(1, 4);
  int tested = 0;
  while (tested < 2000) {
    LatticeVector u1{coord(rng), coord(rng)}, u2{coord(rng), coord(rng)};
    if (!is_primitive(u1) || !is_primitive(u2)) continue;
    std::int64_t w1 = weight(rng), w2 = weight(rng);
    LatticeVector s{-(w1 * u1[0] + w2 * u2[0]), -(w1 * u1[1] + w2 * u2[1])};
    if (is_zero(s) || u1[0] * u2[1] == u1[1] * u2[0]) continue;
    std::int64_t w3 = content(s);
    LatticeVector u3{s[0] / w3, s[1] / w3};
    auto t = dual_triangle({WeightedDirection{u1, w1}, {u2, w2}, {u3, w3}});
    CHECK(t.interior == interior_points_brute_force(t));
    ++tested;
  }
}

TEST_CASE("curve-level multiplicities") {
  CHECK(curve_welschinger_mult(fixtures::line()) == 1);
  CHECK(curve_welschinger_mult(fixtures::two_vertex(2)) == 0);
  auto mm = curve_mikhalkin_mults(fixtures::line());
  CHECK(mm.complex == 1);
  CHECK(mm.real_m == 1);

  auto odd = fixtures::two_vertex(1);
  auto m1 = curve_mikhalkin_mults(odd);
  CHECK(m1.complex == 1);
  CHECK(curve_welschinger_mult(odd) == 1);

  // two_vertex(3): each vertex has multiplicity 9, interior (9-9)/2+1 = 1.
  auto t3 = fixtures::two_vertex(3);
  CHECK(vertex_multiplicities(t3, 0).mult == 9);
  CHECK(vertex_multiplicities(t3, 0).triangle.interior == 1);
  CHECK(curve_welschinger_mult(t3) == 1);  // (-1)(-1)
  CHECK(curve_mikhalkin_mults(t3).real_m == 1);

  // A mult-2 vertex kills the Mikhalkin real multiplicity.
  auto t2 = fixtures::two_vertex(2);
  CHECK(curve_mikhalkin_mults(t2).real_m == 0);
}

TEST_CASE("validation") {
  validate_curve(fixtures::line());
  validate_curve(fixtures::two_vertex(2));
  auto c = fixtures::two_vertex(1);
  c.positions[1] = pt(2, 1);
  CHECK_THROWS_AS(validate_curve(c), Error);
  auto d = fixtures::line();
  d.graph.edges[0].direction = {-2, 0};
  CHECK_THROWS_AS(validate_curve(d), Error);
  auto e = fixtures::line();
  e.graph.edges[0].weight = 0;
  CHECK_THROWS_AS(validate_curve(e), Error);
}

TEST_CASE("lattice length") {
  CHECK(lattice_length({Rational(4), Rational(6)}) == 2);
  CHECK(lattice_length({Rational(1, 2), Rational(0)}) == Rational(1, 2));
  CHECK_THROWS_AS(lattice_length({Rational(0), Rational(0)}), Error);
}
