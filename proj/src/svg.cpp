#include "tropcount/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <queue>

namespace tropcount::svg {

namespace {

constexpr double kPanel = 400.0;
constexpr double kDualPanel = 160.0;
constexpr double kGap = 20.0;

constexpr std::array<const char*, 8> kPalette = {"#1f4e79", "#b03a2e", "#1e8449", "#7d3c98",
                                                 "#b9770e", "#117a65", "#5d6d7e", "#943126"};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

int half_of(const LatticeVector& u) { return (u[1] > 0 || (u[1] == 0 && u[0] > 0)) ? 0 : 1; }

bool ccw_less(const LatticeVector& a, const LatticeVector& b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

struct Box {
  double x0 = 0, y0 = 0, side = 1;

  double sx(double x) const { return (x - x0) / side * kPanel; }
  double sy(double y) const { return kPanel - (y - y0) / side * kPanel; }
};

Box bounding_box(const io::CurveSet& s) {
  double lo_x = std::numeric_limits<double>::max(), lo_y = lo_x;
  double hi_x = std::numeric_limits<double>::lowest(), hi_y = hi_x;
  auto take = [&](const RatVector& p) {
    const double x = p[0].get_d(), y = p[1].get_d();
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  };
  for (const auto& c : s.curves)
    for (const auto& p : c.positions) take(p);
  for (const auto& p : s.points.points) take(p);
  if (lo_x > hi_x) return {};
  double span = std::max(hi_x - lo_x, hi_y - lo_y);
  if (span <= 0) span = 1;
  const double margin = 0.1 * span;
  Box b;
  b.side = span + 2 * margin;
  b.x0 = (lo_x + hi_x) / 2 - b.side / 2;
  b.y0 = (lo_y + hi_y) / 2 - b.side / 2;
  return b;
}

// Parameter at which p + t·u leaves the box.
double exit_time(const Box& b, double px, double py, const LatticeVector& u) {
  double t = std::numeric_limits<double>::max();
  if (u[0] > 0) t = std::min(t, (b.x0 + b.side - px) / u[0]);
  if (u[0] < 0) t = std::min(t, (b.x0 - px) / u[0]);
  if (u[1] > 0) t = std::min(t, (b.y0 + b.side - py) / u[1]);
  if (u[1] < 0) t = std::min(t, (b.y0 - py) / u[1]);
  return std::max(t, 0.0);
}

LatticeVector rot90(const LatticeVector& u, std::int64_t w) { return {-w * u[1], w * u[0]}; }

LatticeVector plus(const LatticeVector& a, const LatticeVector& b) { return {a[0] + b[0], a[1] + b[1]}; }

std::vector<LatticeVector> hull(std::vector<LatticeVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<LatticeVector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

void curve_panel(std::string& out, const io::CurveSet& s, const Box& b) {
  out += "<g class=\"curves\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t ci = 0; ci < s.curves.size(); ++ci) {
    const TropicalCurve& c = s.curves[ci];
    const char* color = kPalette[ci % kPalette.size()];
    out += "<g class=\"curve\" id=\"curve-" + std::to_string(ci) + "\" stroke=\"" + color + "\">\n";
    for (const auto& e : c.graph.edges) {
      const double px = c.positions[e.tail][0].get_d(), py = c.positions[e.tail][1].get_d();
      double qx, qy;
      if (e.bounded()) {
        qx = c.positions[e.head][0].get_d(), qy = c.positions[e.head][1].get_d();
      } else {
        const double t = exit_time(b, px, py, e.direction);
        qx = px + t * e.direction[0], qy = py + t * e.direction[1];
      }
      out += std::string("<line class=\"") + (e.bounded() ? "edge" : "ray") + "\" x1=\"" + num(b.sx(px)) +
             "\" y1=\"" + num(b.sy(py)) + "\" x2=\"" + num(b.sx(qx)) + "\" y2=\"" + num(b.sy(qy)) + "\"/>\n";
      if (e.weight > 1)
        out += "<text class=\"weight\" x=\"" + num(b.sx((px + qx) / 2) + 4) + "\" y=\"" + num(b.sy((py + qy) / 2) - 4) +
               "\" font-size=\"11\" fill=\"" + color + "\" stroke=\"none\">" + std::to_string(e.weight) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</g>\n<g class=\"points\" fill=\"#000000\">\n";
  for (const auto& p : s.points.points)
    out += "<circle cx=\"" + num(b.sx(p[0].get_d())) + "\" cy=\"" + num(b.sy(p[1].get_d())) + "\" r=\"3\"/>\n";
  out += "</g>\n";
}

void dual_panel(std::string& out, const TropicalCurve& c, std::size_t index, double ox, double oy) {
  const auto polys = dual_polygons(c);
  std::vector<LatticeVector> all;
  for (const auto& p : polys) all.insert(all.end(), p.begin(), p.end());
  std::int64_t extent = 1;
  for (const auto& v : all) extent = std::max({extent, v[0], v[1]});
  const double unit = (kDualPanel - 2 * kGap) / static_cast<double>(extent);
  auto px = [&](const LatticeVector& v) { return num(ox + kGap + unit * static_cast<double>(v[0])); };
  auto py = [&](const LatticeVector& v) { return num(oy + kDualPanel - kGap - unit * static_cast<double>(v[1])); };
  auto polygon = [&](const std::vector<LatticeVector>& p, const std::string& cls) {
    out += "<polygon class=\"" + cls + "\" points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + px(p[i]) + "," + py(p[i]);
    out += "\"/>\n";
  };
  out += "<g class=\"dual\" id=\"dual-" + std::to_string(index) + "\" stroke=\"" + kPalette[index % kPalette.size()] +
         "\" fill=\"none\" stroke-width=\"1\">\n";
  polygon(hull(all), "newton");
  for (const auto& p : polys) polygon(p, "cell");
  out += "</g>\n";
}

}  // namespace

std::vector<std::vector<LatticeVector>> dual_polygons(const TropicalCurve& c) {
  if (c.n != 2) throw Error(ErrorCode::InputError, "dual subdivisions need a planar curve");
  const int nv = c.graph.vertex_count;
  std::vector<std::vector<Flag>> flags(nv);
  for (int v = 0; v < nv; ++v) {
    flags[v] = flags_at(c.graph, v);
    std::sort(flags[v].begin(), flags[v].end(),
              [](const Flag& a, const Flag& b) { return ccw_less(a.direction, b.direction); });
  }
  // labels[v][i]: region just clockwise of flag i. Crossing a flag
  // counterclockwise adds w·rot90(u).
  std::vector<std::vector<LatticeVector>> labels(nv);
  auto fill = [&](int v, std::size_t at, LatticeVector label) {
    const auto& f = flags[v];
    labels[v].assign(f.size(), {});
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t i = (at + k) % f.size();
      labels[v][i] = label;
      label = plus(label, rot90(f[i].direction, f[i].weight));
    }
  };
  std::vector<char> seen(nv, 0);
  std::queue<int> todo;
  fill(0, 0, {0, 0});
  seen[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < flags[v].size(); ++i) {
      const Edge& e = c.graph.edges[flags[v][i].edge];
      if (!e.bounded()) continue;
      const int h = e.tail == v ? e.head : e.tail;
      if (seen[h]) continue;
      // The region counterclockwise of this flag at v is clockwise of it at h.
      const LatticeVector left = plus(labels[v][i], rot90(flags[v][i].direction, flags[v][i].weight));
      std::size_t j = 0;
      while (flags[h][j].edge != flags[v][i].edge) ++j;
      fill(h, j, left);
      seen[h] = 1;
      todo.push(h);
    }
  }
  std::int64_t mx = std::numeric_limits<std::int64_t>::max(), my = mx;
  for (const auto& l : labels)
    for (const auto& p : l) mx = std::min(mx, p[0]), my = std::min(my, p[1]);
  for (auto& l : labels)
    for (auto& p : l) p = {p[0] - mx, p[1] - my};
  return labels;
}

std::string render(const io::CurveSet& s, bool dual) {
  const Box b = bounding_box(s);
  const std::size_t panels = dual ? s.curves.size() : 0;
  const double width = std::max(kPanel, static_cast<double>(panels) * kDualPanel);
  const double height = kPanel + (panels ? kGap + kDualPanel : 0);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(kPanel) + "\" height=\"" + num(kPanel) +
         "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
  curve_panel(out, s, b);
  for (std::size_t i = 0; i < panels; ++i)
    dual_panel(out, s.curves[i], i, static_cast<double>(i) * kDualPanel, kPanel + kGap);
  out += "</svg>\n";
  return out;
}

}  // namespace tropcount::svg
