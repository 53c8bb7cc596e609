#include <doctest.h>

#include "fixtures.hpp"
#include "tropcount/enumeration.hpp"
#include "tropcount/welschinger.hpp"

using namespace tropcount;
using fixtures::pt;

TEST_CASE("edge census") {
  CHECK(edge_census(3, 1, 1) == NodeCensus{2, 0, 0});
  CHECK(edge_census(3, 1, -1) == NodeCensus{2, 0, 0});
  CHECK(edge_census(4, -1, 1) == NodeCensus{0, 1, 1});
  CHECK(edge_census(4, -1, -1) == NodeCensus{3, 0, 0});
  CHECK(edge_census(1, 1, 1) == NodeCensus{0, 0, 0});
  try {
    edge_census(5, -1, 1);
    FAIL("expected InvalidZeta");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidZeta);
  }
  for (std::int64_t mu = 1; mu <= 12; ++mu)
    for (int zeta : {1, -1})
      for (int t : {1, -1}) {
        if (mu % 2 == 1 && zeta == -1) continue;
        const auto n = edge_census(mu, zeta, t);
        CHECK(n.elliptic >= 0);
        CHECK(n.elliptic + n.hyperbolic + 2 * n.imaginary_pairs == mu - 1);
      }
}

TEST_CASE("crossings") {
  CHECK(crossing_count(fixtures::line()) == 0);
  // A horizontal ray from (0,0) and a vertical ray from (1,-1) meet at (1,0).
  TropicalCurve c;
  c.n = 2;
  c.graph.vertex_count = 2;
  c.graph.edges = {{0, -1, {1, 0}, 1}, {1, -1, {0, 1}, 2}};
  c.positions = {pt(0, 0), pt(1, -1)};
  const auto s = crossing_summary(c);
  CHECK(s.count == 1);
  CHECK(s.weighted == 2);
  // Moving the second vertex onto the first ray is not generic.
  c.positions[1] = pt(1, 0);
  try {
    crossing_count(c);
    FAIL("expected NonGenericCrossing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonGenericCrossing);
  }
}

TEST_CASE("lift signs") {
  CHECK(lift_sign(fixtures::line(), {}, 1) == 1);
  CHECK(census_sum(fixtures::line(), 1) == 1);

  const auto odd = fixtures::two_vertex(1);
  CHECK(census_sum(odd, 1) == curve_welschinger_mult(odd));
  CHECK(lift_sign(odd, {}, 1) == lift_sign(odd, {}, -1));

  const auto even = fixtures::two_vertex(2);
  const auto lifts = all_lifts(even);
  REQUIRE(lifts.size() == 2);
  for (int st : {1, -1}) {
    CHECK(lift_sign(even, lifts[0], st) == -lift_sign(even, lifts[1], st));
    CHECK(census_sum(even, st) == 0);
  }
  CHECK(curve_welschinger_mult(even) == 0);

  // Length 3 for weight 2: not good until rescaled.
  auto bad = fixtures::two_vertex(2);
  bad.positions[1] = pt(3, 0);
  try {
    lift_sign(bad, lifts[0], 1);
    FAIL("expected NotGood");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGood);
  }
  CHECK(census_sum(bad, -1) == 0);

  LiftAssignment wrong;
  wrong.zeta[0] = -1;
  CHECK_THROWS_AS(lift_sign(odd, wrong, 1), Error);
}

TEST_CASE("welschinger totals for lines and conics") {
  CHECK(welschinger_total({fixtures::line()}) == 1);
  const auto pts = mikhalkin_configuration(5, 8);
  const auto curves = enumerate_curves(0, projective_degree(2), pts).curves;
  CHECK(welschinger_total(curves) == 1);
  for (const auto& c : curves) {
    CHECK(node_count(c) == 0);
    for (int st : {1, -1}) CHECK(census_sum(c, st) == curve_welschinger_mult(c));
  }
}

TEST_CASE("rational cubics have one node") {
  const auto curves = enumerate_curves(0, projective_degree(3), mikhalkin_configuration(8, 7)).curves;
  REQUIRE(curves.size() == 9);
  for (const auto& c : curves) CHECK(node_count(c) == 1);
}
