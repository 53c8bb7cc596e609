#pragma once

// Hand-built curves shared by the unit tests.

#include "tropcount/tropical_core.hpp"

namespace fixtures {

using namespace tropcount;

inline RatVector pt(long x, long y) { return {Rational(x), Rational(y)}; }

/// Standard line with vertex at (x, y).
inline TropicalCurve line(long x = 0, long y = 0) {
  TropicalCurve c;
  c.n = 2;
  c.graph.vertex_count = 1;
  c.graph.edges = {{0, -1, {-1, 0}, 1}, {0, -1, {0, -1}, 1}, {0, -1, {1, 1}, 1}};
  c.positions = {pt(x, y)};
  return c;
}

/// Single vertex with the given weighted rays.
inline TropicalCurve star(std::vector<std::pair<LatticeVector, std::int64_t>> rays) {
  TropicalCurve c;
  c.n = 2;
  c.graph.vertex_count = 1;
  for (auto& [d, w] : rays) c.graph.edges.push_back({0, -1, d, w});
  c.positions = {pt(0, 0)};
  return c;
}

/// Vertices (0,0) and (2,0) joined along (1,0); every edge has weight w.
inline TropicalCurve two_vertex(std::int64_t w) {
  TropicalCurve c;
  c.n = 2;
  c.graph.vertex_count = 2;
  c.graph.edges = {
      {0, 1, {1, 0}, w},
      {0, -1, {0, 1}, w},
      {0, -1, {-1, -1}, w},
      {1, -1, {0, -1}, w},
      {1, -1, {1, 1}, w},
  };
  c.positions = {pt(0, 0), pt(2, 0)};
  return c;
}

}  // namespace fixtures
