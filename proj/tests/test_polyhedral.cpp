#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "tropcount/enumeration.hpp"
#include "tropcount/polyhedral.hpp"

using namespace tropcount;
using fixtures::pt;

namespace {

std::vector<LatticeVector> sorted_rays(const Fan& f) {
  auto r = f.rays();
  std::sort(r.begin(), r.end());
  return r;
}

bool has_clause(const GoodnessReport& r, int clause) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const GoodnessViolation& v) { return v.clause == clause; });
}

std::vector<AffineConstraint> point_constraints(const std::vector<RatVector>& pts) {
  std::vector<AffineConstraint> a;
  for (const auto& p : pts) a.push_back(AffineConstraint::point(p));
  return a;
}

}  // namespace

TEST_CASE("cones over cells") {
  const Cone p = cone_over({{pt(2, 3)}, {}, 0});
  CHECK(p.dim == 1);
  CHECK(p.generators == std::vector<LatticeVector>{{2, 3, 1}});
  const Cone s = cone_over({{pt(0, 0), pt(1, 0)}, {}, 1});
  CHECK(s.dim == 2);
  CHECK(s.generators == std::vector<LatticeVector>{{0, 0, 1}, {1, 0, 1}});
  const Cone r = cone_over({{pt(0, 0)}, {{1, 0}}, 1});
  CHECK(r.generators == std::vector<LatticeVector>{{0, 0, 1}, {1, 0, 0}});
  CHECK_THROWS_AS(cone_over({}), Error);
}

TEST_CASE("planar cone normal forms") {
  CHECK(make_cone({{Rational(2), Rational(0)}, {Rational(0), Rational(3)}}, 2).dim == 2);
  // Redundant generator inside a sector is dropped.
  const Cone sector = make_cone({pt(1, 0), pt(0, 1), pt(1, 1)}, 2);
  CHECK(sector.generators == std::vector<LatticeVector>{{0, 1}, {1, 0}});
  const Cone line = make_cone({pt(1, 1), pt(-2, -2)}, 2);
  CHECK(line.dim == 1);
  CHECK(line.generators.size() == 2);
  const Cone half = make_cone({pt(1, 0), pt(-1, 0), pt(0, 1), pt(1, 1)}, 2);
  CHECK(half.dim == 2);
  CHECK(half.generators.size() == 3);
  CHECK(make_cone({pt(1, 0), pt(-1, 0), pt(0, 1), pt(0, -1), pt(1, 1)}, 2) ==
        make_cone({pt(1, 1), pt(-1, 1), pt(0, -1)}, 2));
  CHECK(make_cone({}, 2).dim == 0);
}

TEST_CASE("asymptotic fan of the real line") {
  PolyhedralDecomposition p;
  p.n = 1;
  p.cells = {{{{Rational(0)}}, {}, 0}, {{{Rational(0)}}, {{-1}}, 1}, {{{Rational(0)}}, {{1}}, 1}};
  const Fan f = asymptotic_fan(p);
  CHECK(f.cones.size() == 3);
  CHECK(sorted_rays(f) == std::vector<LatticeVector>{{-1}, {1}});

  PolyhedralDecomposition bounded;
  bounded.n = 2;
  bounded.cells = {{{pt(0, 0)}, {}, 0}, {{pt(1, 0)}, {}, 0}, {{pt(0, 0), pt(1, 0)}, {}, 1}};
  const Fan g = asymptotic_fan(bounded);
  REQUIRE(g.cones.size() == 1);
  CHECK(g.cones[0].dim == 0);
}

TEST_CASE("overlay of a line") {
  const auto p = build_decomposition_2d({fixtures::line()}, {});
  CHECK(p.cells_of_dim(0).size() == 1);
  CHECK(p.cells_of_dim(1).size() == 3);
  CHECK(p.cells_of_dim(2).size() == 3);
  CHECK(sorted_rays(asymptotic_fan(p)) == std::vector<LatticeVector>{{-1, 0}, {0, -1}, {1, 1}});
  for (int f : p.cells_of_dim(2)) {
    CHECK(p.cells[f].rays.size() == 2);
    CHECK(p.facets[f].size() == 2);
  }

  const auto split = build_decomposition_2d({fixtures::line()}, {AffineConstraint::point(pt(-3, 0))});
  CHECK(split.cells_of_dim(0).size() == 2);
  CHECK(split.cells_of_dim(1).size() == 4);
  CHECK(split.cells_of_dim(2).size() == 3);

  const auto empty = build_decomposition_2d({}, {});
  REQUIRE(empty.cells.size() == 1);
  CHECK(empty.cells[0].dim == 2);
  CHECK(make_cone({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}, 2).generators.size() == 4);
}

TEST_CASE("overlay with a bounded face") {
  // The lines y = 0, x = 0 and x + y = 2 bound one triangle.
  auto l = [](RatVector b, LatticeVector d) {
    return AffineConstraint::make(std::move(b), lattice::IntMatrix::from_columns(2, {d}));
  };
  const auto p = build_decomposition_2d({}, {l(pt(0, 0), {1, 0}), l(pt(0, 0), {0, 1}), l(pt(2, 0), {-1, 1})});
  CHECK(p.cells_of_dim(0).size() == 3);
  CHECK(p.cells_of_dim(1).size() == 9);
  CHECK(p.cells_of_dim(2).size() == 7);
  int bounded = 0;
  for (int f : p.cells_of_dim(2))
    if (p.cells[f].rays.empty()) {
      ++bounded;
      CHECK(p.cells[f].vertices.size() == 3);
    }
  CHECK(bounded == 1);

  CHECK_THROWS_AS(build_decomposition_2d({}, {l(pt(0, 0), {1, 0}), l(pt(5, 0), {1, 0})}), Error);
}

TEST_CASE("goodness of the line through two points") {
  auto c = fixtures::line();
  const auto a = point_constraints({pt(-3, 0), pt(0, -5)});
  c.graph.marked = {0, 1};
  const auto p = build_decomposition_2d({c}, a);
  const auto r = validate_good(p, {c}, a);
  CHECK(r.ok());
  CHECK(r.non_integral_zero_cells == 0);

  // A constraint point that is not a 0-cell violates the second clause.
  const auto bare = build_decomposition_2d({c}, {});
  CHECK(has_clause(validate_good(bare, {c}, a), 2));

  // A cell structure that misses the curve violates the first.
  const auto other = build_decomposition_2d({fixtures::line(1, 1)}, {});
  CHECK(has_clause(validate_good(other, {c}, {}), 1));
}

TEST_CASE("weight must divide the lattice length") {
  auto c = fixtures::two_vertex(2);
  CHECK(validate_good(build_decomposition_2d({c}, {}), {c}, {}).ok());
  c.positions[1] = pt(3, 0);
  const auto r = validate_good(build_decomposition_2d({c}, {}), {c}, {});
  CHECK(has_clause(r, 3));
  CHECK_FALSE(has_clause(r, 1));
}

TEST_CASE("rescaling for goodness") {
  CHECK(rescale_for_goodness({fixtures::line()}, point_constraints({pt(-3, 0)})) == 1);
  CHECK(rescale_for_goodness({fixtures::line()}, point_constraints({{Rational(-1, 2), Rational(0)}})) == 2);
  auto half = fixtures::line();
  half.positions[0] = {Rational(1, 2), Rational(0)};
  CHECK(rescale_for_goodness({half}, {}) % 2 == 0);
  auto w3 = fixtures::two_vertex(3);
  w3.positions[1] = pt(1, 0);
  CHECK(rescale_for_goodness({w3}, {}) == 3);
  auto w2 = fixtures::two_vertex(2);
  w2.positions[1] = {Rational(1, 3), Rational(0)};
  CHECK(rescale_for_goodness({w2}, {}) == 6);
}

TEST_CASE("rescaled conic overlay is good and minimal") {
  const auto pts = mikhalkin_configuration(5, 2);
  const auto curves = enumerate_curves(0, projective_degree(2), pts).curves;
  const auto a = point_constraints(pts.points);
  const Integer s = rescale_for_goodness(curves, a);
  std::vector<TropicalCurve> big;
  for (const auto& c : curves) big.push_back(scaled(c, Rational(s)));
  std::vector<AffineConstraint> big_a;
  for (const auto& x : a) big_a.push_back(scaled(x, Rational(s)));
  const auto p = build_decomposition_2d(big, big_a);
  const auto r = validate_good(p, big, big_a);
  CHECK(r.ok());
  CHECK(sorted_rays(asymptotic_fan(p)) == std::vector<LatticeVector>{{-1, 0}, {0, -1}, {1, 1}});

  // Dividing s by any prime factor breaks integrality or divisibility.
  Integer rest = s;
  for (unsigned long q = 2; rest > 1; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    const Integer smaller = s / q;
    bool bad = false;
    for (const auto& c : curves) {
      const auto t = scaled(c, Rational(smaller));
      for (const auto& v : t.positions)
        for (const auto& x : v) bad = bad || x.get_den() != 1;
      for (const auto& e : t.graph.edges)
        if (e.bounded()) {
          const Rational len = lattice_length(t.positions[e.head] - t.positions[e.tail]) / e.weight;
          bad = bad || len.get_den() != 1;
        }
    }
    for (const auto& x : a)
      for (const auto& y : x.base) bad = bad || Rational(y * smaller).get_den() != 1;
    CHECK(bad);
  }
}
