#include "tropcount/io.hpp"

#include "tropcount/welschinger.hpp"

namespace tropcount::io {

namespace {

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational_point(const RatVector& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(format_rational(x));
  return a;
}

RatVector point_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, "a point must be an array");
  RatVector p;
  for (const auto& x : j) {
    if (x.is_string()) p.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) p.push_back(Rational(x.get<long>()));
    else throw Error(ErrorCode::InputError, "coordinates must be \"p/q\" strings or integers");
  }
  return p;
}

LatticeVector lattice_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, "a lattice vector must be an array");
  LatticeVector v;
  for (const auto& x : j) v.push_back(x.get<std::int64_t>());
  return v;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InputError, std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

std::vector<int> parse_sign_pair(const std::string& s, std::size_t n) {
  if (s.size() != n) throw Error(ErrorCode::InputError, "sign string \"" + s + "\" must have " + std::to_string(n) + " characters");
  std::vector<int> out;
  for (char ch : s) {
    if (ch == '+') out.push_back(1);
    else if (ch == '-') out.push_back(-1);
    else throw Error(ErrorCode::InputError, "sign strings use only '+' and '-'");
  }
  return out;
}

PointsFile parse_points(const json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("points")) throw Error(ErrorCode::InputError, "points file needs a \"points\" array");
    PointsFile f;
    for (const auto& p : j.at("points")) {
      f.points.push_back(point_from(p));
      if (f.points.back().size() != 2) throw Error(ErrorCode::InputError, "points must be planar");
    }
    if (j.contains("signs")) {
      std::vector<std::vector<int>> signs;
      for (const auto& s : j.at("signs")) signs.push_back(parse_sign_pair(s.get<std::string>(), 2));
      if (signs.size() != f.points.size()) throw Error(ErrorCode::InputError, "one sign string per point required");
      f.signs = std::move(signs);
    }
    return f;
  });
}

json degree_to_json(const Degree& d) {
  json a = json::array();
  for (const auto& [v, m] : d.entries) a.push_back({{"vector", v}, {"count", m}});
  return a;
}

Degree degree_from_json(const json& j) {
  return guarded([&] {
    Degree d;
    for (const auto& e : j) {
      const auto m = e.at("count").get<std::int64_t>();
      if (m <= 0) throw Error(ErrorCode::InputError, "degree counts must be positive");
      d.entries[lattice_from(e.at("vector"))] += m;
    }
    return d;
  });
}

json curve_to_json(const TropicalCurve& c, std::size_t id) {
  json j;
  j["id"] = id;
  json verts = json::array();
  for (const auto& p : c.positions) verts.push_back(rational_point(p));
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : c.graph.edges) {
    json x = {{"tail", e.tail}, {"direction", e.direction}, {"weight", e.weight}};
    x["head"] = e.bounded() ? json(e.head) : json(nullptr);
    edges.push_back(x);
  }
  j["edges"] = edges;
  j["marks"] = c.graph.marked;
  if (c.n == 2) {
    const auto m = curve_mikhalkin_mults(c);
    j["mult"] = integer(m.complex);
    j["mult_r"] = curve_welschinger_mult(c);
    j["mult_m"] = integer(m.real_m);
  }
  return j;
}

TropicalCurve curve_from_json(const json& j) {
  return guarded([&] {
    TropicalCurve c;
    for (const auto& p : j.at("vertices")) c.positions.push_back(point_from(p));
    c.graph.vertex_count = static_cast<int>(c.positions.size());
    c.n = c.positions.empty() ? 2 : c.positions.front().size();
    for (const auto& e : j.at("edges")) {
      Edge x;
      x.tail = e.at("tail").get<int>();
      x.head = e.at("head").is_null() ? -1 : e.at("head").get<int>();
      x.direction = lattice_from(e.at("direction"));
      x.weight = e.at("weight").get<std::int64_t>();
      if (x.tail < 0 || x.tail >= c.graph.vertex_count || x.head >= c.graph.vertex_count)
        throw Error(ErrorCode::InputError, "edge endpoint out of range");
      c.graph.edges.push_back(std::move(x));
    }
    if (j.contains("marks"))
      for (const auto& m : j.at("marks")) {
        const int id = m.get<int>();
        if (id < 0 || static_cast<std::size_t>(id) >= c.graph.edges.size())
          throw Error(ErrorCode::InputError, "mark refers to a missing edge");
        c.graph.marked.push_back(id);
      }
    validate_curve(c);
    return c;
  });
}

json curve_set_to_json(const CurveSet& s) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "curves";
  j["genus"] = s.genus;
  if (s.projective_degree) j["projective_degree"] = *s.projective_degree;
  j["degree"] = degree_to_json(s.degree);
  json pts = json::array();
  for (const auto& p : s.points.points) pts.push_back(rational_point(p));
  j["points"] = pts;
  j["point_mode"] = s.points.mode;
  if (s.points.mode == "mikhalkin") j["seed"] = s.points.seed;
  j["raw_trees"] = s.raw_trees;
  j["types"] = s.type_count;
  json curves = json::array();
  Integer complex = 0, welschinger = 0;
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    curves.push_back(curve_to_json(s.curves[i], i));
    if (s.curves[i].n == 2) {
      complex += curve_mikhalkin_mults(s.curves[i]).complex;
      welschinger += curve_welschinger_mult(s.curves[i]);
    }
  }
  j["curves"] = curves;
  j["totals"] = {{"curves", s.curves.size()}, {"complex", integer(complex)}, {"welschinger", integer(welschinger)}};
  return j;
}

CurveSet curve_set_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_object() || j.value("schema", "") != kSchema)
      throw Error(ErrorCode::InputError, std::string("expected a document with \"schema\": \"") + kSchema + "\"");
    if (j.value("kind", "") != "curves") throw Error(ErrorCode::InputError, "expected a curve set");
    CurveSet s;
    s.genus = j.at("genus").get<std::int64_t>();
    if (j.contains("projective_degree")) s.projective_degree = j.at("projective_degree").get<int>();
    s.degree = degree_from_json(j.at("degree"));
    for (const auto& p : j.at("points")) s.points.points.push_back(point_from(p));
    s.points.mode = j.value("point_mode", "explicit");
    s.points.seed = j.value("seed", std::uint64_t{0});
    s.raw_trees = j.value("raw_trees", std::size_t{0});
    s.type_count = j.value("types", std::size_t{0});
    for (const auto& c : j.at("curves")) {
      s.curves.push_back(curve_from_json(c));
      if (s.curves.back().graph.marked.size() != s.points.points.size())
        throw Error(ErrorCode::InputError, "every curve needs one mark per point");
    }
    return s;
  });
}

json count_report_to_json(const CountReport& r) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "count";
  json rows = json::array();
  for (const auto& row : r.rows) {
    json x;
    x["curve"] = row.curve_id;
    x["complex_weight"] = integer(row.complex_weight);
    x["th_index"] = integer(row.th.complex_index);
    json factors = json::array();
    for (const auto& f : row.th.factors) factors.push_back(integer(f));
    x["th_factors"] = factors;
    x["constraint_index"] = integer(row.constraint_index);
    x["complex_contribution"] = integer(row.complex_contribution);
    x["vertex_product"] = integer(row.vertex_product);
    if (r.has_real) {
      x["real_weight"] = integer(row.real_weight);
      x["th_real_index"] = integer(row.th.real_index);
      x["th_twisted_real_index"] = integer(*row.th.twisted_real);
      x["constraint_real_index"] = integer(row.constraint_real_index);
      x["real_contribution"] = integer(row.real_contribution);
    }
    rows.push_back(x);
  }
  j["rows"] = rows;
  json totals = {{"complex", integer(r.n_complex)}, {"welschinger", integer(r.welschinger)}};
  if (r.has_real) {
    totals["real"] = integer(r.n_real);
    totals["sign_t"] = r.sign_t;
    j["parity_ok"] = r.parity_ok();
  }
  j["totals"] = totals;
  return j;
}

}  // namespace tropcount::io
