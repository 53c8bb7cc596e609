#include <doctest.h>

#include <chrono>

#include "tropcount/enumeration.hpp"

using namespace tropcount;

namespace {

struct Totals {
  std::size_t curves = 0;
  Integer complex = 0;
  Integer real = 0;
};

Totals totals(int d, std::uint64_t seed) {
  const auto pts = mikhalkin_configuration(static_cast<std::size_t>(3 * d - 1), seed);
  const auto r = enumerate_curves(0, projective_degree(d), pts);
  Totals t;
  t.curves = r.curves.size();
  for (const auto& c : r.curves) {
    t.complex += curve_mikhalkin_mults(c).complex;
    t.real += curve_welschinger_mult(c);
  }
  return t;
}

}  // namespace

TEST_CASE("type counts for small projective degrees") {
  CHECK(enumerate_types(0, projective_degree(1)).types.size() == 1);
  const auto d2 = enumerate_types(0, projective_degree(2));
  CHECK(d2.raw_trees == 105);
  const auto d3 = enumerate_types(0, projective_degree(3));
  CHECK(d3.raw_trees == 135135);
  for (const auto& t : d3.types) {
    CHECK(t.graph.vertex_count == 7);
    CHECK(t.graph.edges.size() == 15);
  }
  CHECK_THROWS_AS(enumerate_types(1, projective_degree(2)), Error);
}

TEST_CASE("mikhalkin points are integral and ordered") {
  const auto p = mikhalkin_configuration(8, 7);
  REQUIRE(p.points.size() == 8);
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    CHECK(p.points[i][0].get_den() == 1);
    CHECK(p.points[i][1].get_den() == 1);
    if (i) CHECK(p.points[i - 1][0] < p.points[i][0]);
  }
  CHECK(mikhalkin_configuration(8, 7).points == p.points);
}

TEST_CASE("line through two points") {
  const Totals t = totals(1, 1);
  CHECK(t.curves == 1);
  CHECK(t.complex == 1);
  CHECK(t.real == 1);
}

TEST_CASE("conics through five points") {
  const Totals t = totals(2, 3);
  CHECK(t.complex == 1);
  CHECK(t.real == 1);
}

TEST_CASE("cubics through eight points") {
  for (std::uint64_t seed : {1, 2, 5}) {
    const Totals t = totals(3, seed);
    CHECK(t.complex == 12);
    CHECK(t.real == 8);
  }
}

TEST_CASE("wrong number of points") {
  PointConfiguration p;
  p.points = {{1, 2}};
  CHECK_THROWS_AS(enumerate_curves(0, projective_degree(1), p), Error);
}

TEST_CASE("points on a common edge direction are rejected") {
  auto code = [](PointConfiguration p) {
    try {
      enumerate_curves(0, projective_degree(1), p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalMismatch;
  };
  PointConfiguration p;
  p.points = {{0, 0}, {5, 0}};
  CHECK(code(p) == ErrorCode::GenericityFailure);
  p.points = {{0, 0}, {Rational(-1, 2), Rational(-1, 2)}};
  CHECK(code(p) == ErrorCode::GenericityFailure);
  p.points = {{0, 0}, {0, 0}};
  CHECK(code(p) == ErrorCode::GenericityFailure);
  p.points = {{0, 0}, {1, 3}};
  CHECK(enumerate_curves(0, projective_degree(1), p).curves.size() == 1);
}
