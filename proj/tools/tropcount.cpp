// tropcount: enumerate, count and draw rational tropical plane curves.
//
// Exit codes: 0 ok, 2 input error, 3 genericity failure, 4 cross-check
// mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tropcount/acceptance.hpp"
#include "tropcount/exact_lattice.hpp"
#include "tropcount/io.hpp"
#include "tropcount/polyhedral.hpp"
#include "tropcount/svg.hpp"
#include "tropcount/welschinger.hpp"

using namespace tropcount;
using io::json;

namespace {

enum Exit { kOk = 0, kInput = 2, kGenericity = 3, kMismatch = 4 };

struct Source {
  int degree = 0;
  std::int64_t genus = 0;
  std::uint64_t seed = 7;
  std::string points_file;
  std::string input;
};

struct Output {
  std::string format = "json";
  std::string path;
};

struct Loaded {
  io::CurveSet set;
  std::optional<std::vector<std::vector<int>>> file_signs;
};

void add_source(CLI::App* cmd, Source& s, bool with_input) {
  cmd->add_option("--degree,-d", s.degree, "Projective degree d")->check(CLI::Range(1, 8));
  cmd->add_option("--genus,-g", s.genus, "Genus (only 0 is supported)");
  cmd->add_option("--mikhalkin-seed", s.seed, "Seed for points in Mikhalkin position (default 7)");
  cmd->add_option("--points", s.points_file, "Points JSON file");
  if (with_input) cmd->add_option("--input,-i", s.input, "Curve-set JSON written by `enumerate`");
}

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--output,-o", o.path, "Write here instead of stdout");
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InputError, path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InputError, "cannot write " + path);
  out << text;
}

Loaded load(const Source& s) {
  Loaded l;
  if (!s.input.empty()) {
    if (!s.points_file.empty() || s.degree != 0)
      throw Error(ErrorCode::InputError, "--input excludes --degree and --points");
    l.set = io::curve_set_from_json(read_json(s.input));
    return l;
  }
  if (s.degree == 0) throw Error(ErrorCode::InputError, "--degree is required");
  l.set.genus = s.genus;
  l.set.degree = projective_degree(s.degree);
  l.set.projective_degree = s.degree;
  if (!s.points_file.empty()) {
    auto f = io::parse_points(read_json(s.points_file));
    l.set.points.points = std::move(f.points);
    l.file_signs = std::move(f.signs);
  } else {
    l.set.points = mikhalkin_configuration(static_cast<std::size_t>(3 * s.degree - 1), s.seed);
  }
  auto r = enumerate_curves(l.set.genus, l.set.degree, l.set.points);
  l.set.raw_trees = r.raw_trees;
  l.set.type_count = r.type_count;
  l.set.curves = std::move(r.curves);
  return l;
}

std::vector<AffineConstraint> constraints_of(const io::CurveSet& s) {
  std::vector<AffineConstraint> a;
  for (const auto& p : s.points.points) a.push_back(AffineConstraint::point(p));
  return a;
}

std::string cell(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : std::string(w - s.size(), ' ') + s + " ";
}

std::string cell(const Integer& z, std::size_t w) { return cell(z.get_str(), w); }
std::string cell(std::int64_t z, std::size_t w) { return cell(std::to_string(z), w); }

// --- enumerate ---------------------------------------------------------------

int run_enumerate(const Source& src, const Output& out) {
  const Loaded l = load(src);
  if (out.format == "json") {
    emit(out.path, io::curve_set_to_json(l.set).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream t;
  t << "points " << l.set.points.points.size() << ", trees " << l.set.raw_trees << ", types " << l.set.type_count
    << ", curves " << l.set.curves.size() << "\n";
  t << cell("curve", 6) << cell("vertices", 9) << cell("mult", 8) << cell("mult_r", 7) << "bounded weights\n";
  Integer n = 0, w = 0;
  for (std::size_t i = 0; i < l.set.curves.size(); ++i) {
    const auto& c = l.set.curves[i];
    const Integer m = curve_mikhalkin_mults(c).complex;
    const int r = curve_welschinger_mult(c);
    n += m, w += r;
    std::string weights;
    for (const auto& e : c.graph.edges)
      if (e.bounded()) weights += (weights.empty() ? "" : ",") + std::to_string(e.weight);
    t << cell(static_cast<std::int64_t>(i), 6) << cell(c.graph.vertex_count, 9) << cell(m, 8) << cell(r, 7) << weights
      << "\n";
  }
  t << "complex total " << n << ", welschinger total " << w << "\n";
  emit(out.path, t.str());
  return kOk;
}

// --- count -------------------------------------------------------------------

struct CountOptions {
  bool complex = false;
  bool real = false;
  std::string signs;
  std::string sign_t = "+";
};

RealPointConfig real_config(const std::string& text, std::size_t count,
                            const std::optional<std::vector<std::vector<int>>>& from_file) {
  if (text.empty()) {
    if (!from_file) throw Error(ErrorCode::InputError, "--real needs --signs or signs in the points file");
    return RealPointConfig{*from_file};
  }
  if (text == "all-positive") return RealPointConfig::all_positive(count, 2);
  RealPointConfig cfg;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) cfg.signs.push_back(io::parse_sign_pair(part, 2));
  if (cfg.signs.size() == 1) cfg.signs.assign(count, cfg.signs.front());
  if (cfg.signs.size() != count)
    throw Error(ErrorCode::InputError, "--signs lists " + std::to_string(cfg.signs.size()) + " pairs for " +
                                           std::to_string(count) + " points");
  return cfg;
}

int run_count(const Source& src, const Output& out, const CountOptions& opt) {
  if (opt.sign_t != "+" && opt.sign_t != "-") throw Error(ErrorCode::InputError, "--sign-t takes + or -");
  if (!opt.real && !opt.signs.empty()) throw Error(ErrorCode::InputError, "--signs only applies with --real");
  const Loaded l = load(src);
  std::vector<TropicalCurve> curves = l.set.curves;
  std::vector<AffineConstraint> constraints = constraints_of(l.set);
  CountReport report;
  Integer s = 1;
  if (opt.real) {
    const RealPointConfig cfg = real_config(opt.signs, constraints.size(), l.file_signs);
    // Real indices need integral base points and lengths divisible by weights.
    s = rescale_for_goodness(curves, constraints);
    for (auto& c : curves) c = scaled(c, Rational(s));
    for (auto& a : constraints) a = scaled(a, Rational(s));
    report = count_real(curves, constraints, cfg, opt.sign_t == "+" ? 1 : -1);
  } else {
    report = count_complex(curves, constraints);
  }
  std::vector<std::size_t> mismatched;
  for (const auto& row : report.rows)
    if (row.vertex_product != 0 && row.complex_contribution != row.vertex_product) mismatched.push_back(row.curve_id);
  const bool parity = report.parity_ok();

  if (out.format == "json") {
    json j = io::count_report_to_json(report);
    j["rescale"] = s.get_str();
    j["requested"] = {{"complex", opt.complex || !opt.real}, {"real", opt.real}};
    j["vertex_product_ok"] = mismatched.empty();
    emit(out.path, j.dump(2) + "\n");
  } else {
    std::ostringstream t;
    t << cell("curve", 6) << cell("D(T_h)", 7) << cell("weight", 7) << cell("N", 6);
    if (opt.real) t << cell("D^R_tw", 7) << cell("weight_R", 9) << cell("N^R", 6);
    t << "\n";
    for (const auto& row : report.rows) {
      t << cell(static_cast<std::int64_t>(row.curve_id), 6) << cell(row.th.complex_index, 7)
        << cell(row.complex_weight, 7) << cell(row.complex_contribution, 6);
      if (opt.real) t << cell(*row.th.twisted_real, 7) << cell(row.real_weight, 9) << cell(row.real_contribution, 6);
      t << "\n";
    }
    t << "N-trop " << report.n_complex;
    if (opt.real) t << ", N^R-trop " << report.n_real << " (sign_t " << opt.sign_t << ")";
    t << ", W " << report.welschinger << "\n";
    if (opt.real) t << "parity " << (parity ? "ok" : "FAILED") << "\n";
    emit(out.path, t.str());
  }
  for (auto id : mismatched)
    std::cerr << "curve " << id << ": lattice count differs from the vertex product\n";
  if (!parity) std::cerr << "parity check failed\n";
  return mismatched.empty() && parity ? kOk : kMismatch;
}

// --- welschinger -------------------------------------------------------------

int run_welschinger(const Source& src, const Output& out) {
  const Loaded l = load(src);
  for (const auto& p : l.set.points.points)
    if (p.size() != 2) throw Error(ErrorCode::InputError, "welschinger needs planar point constraints");
  json rows = json::array();
  std::ostringstream t;
  t << cell("curve", 6) << cell("mult_r", 7) << cell("census+", 8) << cell("census-", 8) << "\n";
  Integer total = 0;
  bool ok = true;
  for (std::size_t i = 0; i < l.set.curves.size(); ++i) {
    const auto& c = l.set.curves[i];
    const int m = curve_welschinger_mult(c);
    const std::int64_t plus = census_sum(c, 1), minus = census_sum(c, -1);
    const bool agree = plus == m && minus == m;
    if (!agree) std::cerr << "curve " << i << ": census sum disagrees with Mult_R\n";
    ok = ok && agree;
    total += m;
    rows.push_back({{"curve", i}, {"mult_r", m}, {"census_plus", plus}, {"census_minus", minus}, {"agree", agree}});
    t << cell(static_cast<std::int64_t>(i), 6) << cell(m, 7) << cell(plus, 8) << cell(minus, 8)
      << (agree ? "" : "MISMATCH") << "\n";
  }
  t << "W " << total << "\n";
  if (out.format == "json") {
    json j = {{"schema", io::kSchema}, {"kind", "welschinger"}, {"rows", rows}};
    j["totals"] = {{"welschinger", total.get_si()}, {"curves", l.set.curves.size()}};
    j["census_ok"] = ok;
    emit(out.path, j.dump(2) + "\n");
  } else {
    emit(out.path, t.str());
  }
  return ok ? kOk : kMismatch;
}

// --- render / selftest -------------------------------------------------------

int run_render(const std::string& input, const std::string& output, bool dual) {
  const io::CurveSet set = io::curve_set_from_json(read_json(input));
  emit(output, svg::render(set, dual));
  return kOk;
}

int run_selftest(std::uint64_t seed, bool timing, const std::string& fault) {
  if (!fault.empty() && fault != "snf") throw Error(ErrorCode::InputError, "unknown fault " + fault);
  lattice::testing::set_snf_fault(fault == "snf");
  acceptance::Options opt;
  opt.seed = seed;
  std::vector<int> failed;
  acceptance::run_all(opt, [&](const acceptance::CriterionResult& r) {
    std::cout << acceptance::format_line(r, timing) << "\n" << std::flush;
    if (!r.pass) failed.push_back(r.id);
  });
  lattice::testing::set_snf_fault(false);
  if (failed.empty()) {
    std::cout << "all criteria passed\n";
    return kOk;
  }
  std::cout << "failing criteria:";
  for (int id : failed) std::cout << " " << id;
  std::cout << "\n";
  return kMismatch;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::GenericityFailure:
    case ErrorCode::NonGenericInput:
    case ErrorCode::NonGenericCrossing:
    case ErrorCode::ConstraintOnVertex:
      return kGenericity;
    case ErrorCode::InternalMismatch:
      return kMismatch;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts rational tropical plane curves through points, complex and real."};
  app.require_subcommand(1);

  Source src;
  Output out;

  auto* enumerate = app.add_subcommand("enumerate", "List the tropical curves through the points");
  add_source(enumerate, src, false);
  add_output(enumerate, out);

  CountOptions copt;
  auto* count = app.add_subcommand("count", "Lattice-index counts N-trop and N^R-trop");
  add_source(count, src, true);
  add_output(count, out);
  count->add_flag("--complex", copt.complex, "Complex count (default)");
  count->add_flag("--real", copt.real, "Real count for the given signs");
  count->add_option("--signs", copt.signs, "all-positive, one pair like +- for every point, or a comma list");
  count->add_option("--sign-t", copt.sign_t, "Sign of t: + or -");

  auto* welsch = app.add_subcommand("welschinger", "Welschinger count with a per-curve census check");
  add_source(welsch, src, true);
  add_output(welsch, out);

  std::string render_in, render_out;
  bool dual = false;
  auto* render = app.add_subcommand("render", "Draw a curve set as SVG");
  render->add_option("--input,-i", render_in, "Curve-set JSON")->required();
  render->add_option("--output,-o", render_out, "SVG file (stdout if omitted)");
  render->add_flag("--dual", dual, "Add the dual subdivision of each curve");

  std::uint64_t st_seed = 7;
  bool timing = false;
  std::string fault;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_option("--mikhalkin-seed", st_seed, "Point seed");
  selftest->add_flag("--timing", timing, "Append timings to each line");
  selftest->add_option("--inject-fault", fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*enumerate) return run_enumerate(src, out);
    if (*count) return run_count(src, out, copt);
    if (*welsch) return run_welschinger(src, out);
    if (*render) return run_render(render_in, render_out, dual);
    if (*selftest) return run_selftest(st_seed, timing, fault);
  } catch (const Error& e) {
    std::cerr << "tropcount: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "tropcount: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
