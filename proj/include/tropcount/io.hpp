#pragma once

// JSON documents of the command-line tool ("schema": "tropcount/1").
// Rationals travel as "p/q" strings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcount/counting.hpp"
#include "tropcount/enumeration.hpp"

namespace tropcount::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tropcount/1";

/// Parsed points file: {"points": [["p/q","r/s"], ...], "signs": ["++", ...]}.
struct PointsFile {
  std::vector<RatVector> points;
  std::optional<std::vector<std::vector<int>>> signs;
};

PointsFile parse_points(const json& j);
/// "+-" → {1, -1}. Throws InputError on anything but '+' and '-'.
std::vector<int> parse_sign_pair(const std::string& s, std::size_t n);

/// Everything needed to recount an enumeration without redoing it.
struct CurveSet {
  std::int64_t genus = 0;
  Degree degree;
  std::optional<int> projective_degree;
  PointConfiguration points;
  std::size_t raw_trees = 0;
  std::size_t type_count = 0;
  std::vector<TropicalCurve> curves;
};

json degree_to_json(const Degree& d);
Degree degree_from_json(const json& j);

json curve_to_json(const TropicalCurve& c, std::size_t id);
TropicalCurve curve_from_json(const json& j);

json curve_set_to_json(const CurveSet& s);
/// Throws InputError on schema or shape problems; validates every curve.
CurveSet curve_set_from_json(const json& j);

json count_report_to_json(const CountReport& r);

}  // namespace tropcount::io
