#include "tropcount/exact_lattice.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

namespace tropcount::lattice {

namespace {

std::atomic<bool> g_snf_fault{false};

// |a| < |b| with zero treated as +infinity.
bool smaller_nonzero(const Integer& a, const Integer& b) {
  if (a == 0) return false;
  if (b == 0) return true;
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

struct SnfWork {
  IntMatrix diag;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  std::size_t rank = 0;
};

// Row/column gcd elimination pivoting on the entry of minimal absolute value.
// Maintains left * m * right == diag and left * left_inverse == I.
SnfWork smith_work(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.rows()),
            IntMatrix::identity(m.cols()), 0};
  IntMatrix& a = w.diag;
  const std::size_t rows = a.rows(), cols = a.cols();

  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    w.left.swap_rows(i, j);
    w.left_inverse.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    w.right.swap_cols(i, j);
  };
  // row[dst] += k row[src]
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    w.left.add_row_multiple(dst, src, k);
    w.left_inverse.add_col_multiple(src, dst, -k);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    a.add_col_multiple(dst, src, k);
    w.right.add_col_multiple(dst, src, k);
  };

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  while (t < limit) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi == rows || smaller_nonzero(a(i, j), a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are strictly smaller than the pivot; bring the smallest in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (smaller_nonzero(a(i, t), a(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (smaller_nonzero(a(t, j), a(bi, bj))) { bi = t; bj = j; }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Divisibility chain: any entry not divisible by the pivot is folded
      // into the pivot row and elimination restarts.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            row_add(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      w.left.negate_row(t);
      w.left_inverse.negate_col(t);
    }
    ++t;
  }
  w.rank = t;
  return w;
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InputError, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<LatticeVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::InputError, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = static_cast<long>(cols[c][r]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column(std::size_t c) const {
  IntMatrix m(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) m(r, 0) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw Error(ErrorCode::InputError, "hconcat row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (other.cols_ != cols_) throw Error(ErrorCode::InputError, "vconcat column mismatch");
  IntMatrix m(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<long>(data_.size()));
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InputError, "matrix product shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InputError, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rk][c];
      for (std::size_t k = c; k < m.cols(); ++k) rows[r][k] -= f * rows[rk][k];
    }
    ++rk;
  }
  return rk;
}

// ---------------------------------------------------------------- HNF / SNF

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult out{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = out.hnf;
  IntMatrix& u = out.transform;
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.rows() && k < h.cols(); ++i) {
    for (;;) {
      std::size_t best = h.cols();
      for (std::size_t j = k; j < h.cols(); ++j)
        if (h(i, j) != 0 && (best == h.cols() || mpz_cmpabs(h(i, j).get_mpz_t(), h(i, best).get_mpz_t()) < 0)) best = j;
      if (best == h.cols()) break;
      h.swap_cols(k, best);
      u.swap_cols(k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
        h.add_col_multiple(j, k, -q);
        u.add_col_multiple(j, k, -q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      h.negate_col(k);
      u.negate_col(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
      if (q == 0) continue;
      h.add_col_multiple(j, k, -q);
      u.add_col_multiple(j, k, -q);
    }
    ++k;
  }
  out.rank = k;
  return out;
}

IntMatrix SnfResult::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d(i, i) = invariant_factors[i];
  return d;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfWork w = smith_work(m);
  SnfResult out;
  out.rank = w.rank;
  out.invariant_factors.reserve(w.rank);
  for (std::size_t i = 0; i < w.rank; ++i) out.invariant_factors.push_back(w.diag(i, i));
  out.left_transform = std::move(w.left);
  out.right_transform = std::move(w.right);
  if (g_snf_fault.load() && !out.invariant_factors.empty()) out.invariant_factors.back() *= 2;
  return out;
}

IntMatrix saturate(const IntMatrix& sublattice, std::size_t ambient_rank) {
  if (sublattice.rows() != ambient_rank && sublattice.cols() != 0)
    throw Error(ErrorCode::InputError, "sublattice generators do not live in the ambient lattice");
  if (sublattice.cols() == 0) return IntMatrix(ambient_rank, 0);
  SnfWork w = smith_work(sublattice);
  IntMatrix gens(ambient_rank, w.rank);
  for (std::size_t r = 0; r < ambient_rank; ++r)
    for (std::size_t c = 0; c < w.rank; ++c) gens(r, c) = w.left_inverse(r, c);
  HermiteResult h = hermite_normal_form(gens);
  IntMatrix out(ambient_rank, h.rank);
  for (std::size_t r = 0; r < ambient_rank; ++r)
    for (std::size_t c = 0; c < h.rank; ++c) out(r, c) = h.hnf(r, c);
  return out;
}

QuotientBasis quotient_basis(const IntMatrix& sublattice, std::size_t ambient_rank) {
  QuotientBasis q;
  q.ambient_rank = ambient_rank;
  q.sublattice_generators = sublattice.cols() == 0 ? IntMatrix(ambient_rank, 0) : sublattice;
  if (sublattice.cols() == 0) {
    q.projection = IntMatrix::identity(ambient_rank);
    q.quotient_rank = ambient_rank;
    return q;
  }
  if (sublattice.rows() != ambient_rank)
    throw Error(ErrorCode::InputError, "sublattice generators do not live in the ambient lattice");
  SnfWork w = smith_work(sublattice);
  for (std::size_t i = 0; i < w.rank; ++i)
    if (w.diag(i, i) != 1)
      throw Error(ErrorCode::NotSaturated,
                  "quotient has torsion (invariant factor " + w.diag(i, i).get_str() + ")");
  q.quotient_rank = ambient_rank - w.rank;
  q.projection = w.left.row_block(w.rank, q.quotient_rank);
  return q;
}

// ---------------------------------------------------------------- F2

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, (b & 1) != 0);
}

BitVector& BitVector::operator^=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

namespace {

BitVector row_mod2(const IntMatrix& m, std::size_t r, std::size_t width) {
  BitVector b(width);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (mpz_odd_p(m(r, c).get_mpz_t())) b.set(c, true);
  return b;
}

}  // namespace

std::optional<BitVector> f2_solve(const IntMatrix& m, const BitVector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::InputError, "f2_solve: rhs length mismatch");
  const std::size_t n = m.cols();
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector b = row_mod2(m, r, n + 1);
    b.set(n, rhs.get(r));
    rows.push_back(std::move(b));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < n && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rk && rows[r].get(c)) rows[r] ^= rows[rk];
    pivot_cols.push_back(c);
    ++rk;
  }
  for (std::size_t r = rk; r < rows.size(); ++r)
    if (rows[r].get(n)) return std::nullopt;
  BitVector x(n);
  for (std::size_t i = 0; i < rk; ++i) x.set(pivot_cols[i], rows[i].get(n));
  return x;
}

std::size_t f2_rank(const IntMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(row_mod2(m, r, m.cols()));
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r)
      if (rows[r].get(c)) rows[r] ^= rows[rk];
    ++rk;
  }
  return rk;
}

// ---------------------------------------------------------------- Q solve

std::optional<RationalSolution> solve_rational(const std::vector<RatVector>& m, const RatVector& rhs) {
  if (m.size() != rhs.size()) throw Error(ErrorCode::InputError, "solve_rational: shape mismatch");
  const std::size_t n = m.empty() ? 0 : m.front().size();
  std::vector<RatVector> a = m;
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(rhs[r]);
  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < n && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rk]);
    const Rational inv = 1 / a[rk][c];
    for (std::size_t k = c; k <= n; ++k) a[rk][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rk || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[rk][k];
    }
    pivots.push_back(c);
    ++rk;
  }
  for (std::size_t r = rk; r < a.size(); ++r)
    if (a[r][n] != 0) return std::nullopt;
  RationalSolution s;
  s.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < rk; ++i) s.x[pivots[i]] = a[i][n];
  s.unique = rk == n;
  return s;
}

namespace testing {
void set_snf_fault(bool enabled) { g_snf_fault.store(enabled); }
bool snf_fault_enabled() { return g_snf_fault.load(); }
}  // namespace testing

}  // namespace tropcount::lattice
