#include "tropcount/counting.hpp"

#include "tropcount/parallel.hpp"

namespace tropcount {

using lattice::IntMatrix;

IndexBundle real_index(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InfiniteCokernel, "lattice map is not square");
  const auto snf = lattice::smith_normal_form(m);
  if (snf.rank != m.rows()) throw Error(ErrorCode::InfiniteCokernel, "lattice map is singular");
  IndexBundle b;
  b.factors = snf.invariant_factors;
  for (const auto& d : b.factors) {
    b.complex_index *= d;
    if (mpz_even_p(d.get_mpz_t())) b.real_index *= 2;
  }
  if (b.complex_index != abs(lattice::determinant(m)))
    throw Error(ErrorCode::InternalMismatch, "product of invariant factors differs from |det|");
  return b;
}

IndexBundle twisted_real_index(const LatticeMapTh& t, const SignClass& sigma) {
  IndexBundle b = real_index(t.matrix);
  if (sigma.bits.size() != t.matrix.rows()) throw Error(ErrorCode::InputError, "sign class has wrong length");
  // σ vanishes in Coker/2 iff it lies in the mod-2 column space.
  b.twisted_real = lattice::f2_solve(t.matrix, sigma.bits) ? b.real_index : Integer(0);
  return b;
}

IndexBundle constraint_index(const TropicalCurve& c, const AffineConstraint& a, int marked_edge) {
  return real_index(build_constraint_inclusion(direction_from_minus(c, marked_edge), a));
}

Integer total_real_weight(const TropicalCurve& c) {
  Integer w = 1;
  for (const auto& e : c.graph.edges)
    if (e.bounded() && e.weight % 2 == 0) w *= 2;
  for (int m : c.graph.marked) w *= static_cast<long>(c.graph.edges.at(m).weight);
  return w;
}

Integer total_complex_weight(const TropicalCurve& c) {
  Integer w = 1;
  for (const auto& e : c.graph.edges)
    if (e.bounded()) w *= static_cast<long>(e.weight);
  for (int m : c.graph.marked) w *= static_cast<long>(c.graph.edges.at(m).weight);
  return w;
}

bool CountReport::parity_ok() const {
  if (!has_real) return true;
  for (const auto& r : rows) {
    const Integer& tw = *r.th.twisted_real;
    if (tw != 0 && (r.complex_contribution - r.real_contribution) % 2 != 0) return false;
    if (tw == 0 && r.complex_contribution % 2 != 0) return false;
  }
  return (n_complex - n_real) % 2 == 0;
}

namespace {

CountRow complex_row(const TropicalCurve& c, std::size_t id, const std::vector<AffineConstraint>& constraints) {
  if (c.graph.marked.size() != constraints.size())
    throw Error(ErrorCode::InputError, "curve " + std::to_string(id) + " is not fully marked");
  CountRow row;
  row.curve_id = id;
  row.th = real_index(build_T_h(c, constraints, c.graph.marked).matrix);
  row.complex_weight = total_complex_weight(c);
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const auto b = constraint_index(c, constraints[j], c.graph.marked[j]);
    row.constraint_index *= b.complex_index;
    row.constraint_real_index *= b.real_index;
  }
  row.complex_contribution = row.complex_weight * row.th.complex_index * row.constraint_index;
  row.vertex_product = c.n == 2 ? curve_mikhalkin_mults(c).complex : Integer(0);
  return row;
}

}  // namespace

CountReport count_complex(const std::vector<TropicalCurve>& curves,
                          const std::vector<AffineConstraint>& constraints) {
  CountReport report;
  report.rows.resize(curves.size());
  parallel_for(curves.size(), [&](std::size_t i) { report.rows[i] = complex_row(curves[i], i, constraints); });
  for (std::size_t i = 0; i < curves.size(); ++i) {
    report.n_complex += report.rows[i].complex_contribution;
    if (curves[i].n == 2) report.welschinger += curve_welschinger_mult(curves[i]);
  }
  return report;
}

CountReport count_real(const std::vector<TropicalCurve>& curves,
                       const std::vector<AffineConstraint>& constraints, const RealPointConfig& config,
                       int sign_t) {
  CountReport report;
  report.has_real = true;
  report.sign_t = sign_t;
  report.rows.resize(curves.size());
  parallel_for(curves.size(), [&](std::size_t i) {
    const TropicalCurve& c = curves[i];
    CountRow row = complex_row(c, i, constraints);
    const LatticeMapTh t = build_T_h(c, constraints, c.graph.marked);
    row.th = twisted_real_index(t, sigma_sign_class(t, constraints, config, sign_t));
    row.real_weight = total_real_weight(c);
    row.real_contribution = row.real_weight * *row.th.twisted_real * row.constraint_real_index;
    report.rows[i] = std::move(row);
  });
  for (std::size_t i = 0; i < curves.size(); ++i) {
    report.n_complex += report.rows[i].complex_contribution;
    report.n_real += report.rows[i].real_contribution;
    if (curves[i].n == 2) report.welschinger += curve_welschinger_mult(curves[i]);
  }
  return report;
}

}  // namespace tropcount
