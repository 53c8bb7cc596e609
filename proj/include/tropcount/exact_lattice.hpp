#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, saturation,
// quotient lattices, and F2 elimination. No floating point anywhere.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tropcount/types.hpp"

namespace tropcount::lattice {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<LatticeVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Integer>& entries() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix column(std::size_t c) const;
  /// Rows [first, first+count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;
  /// [this ; other]
  IntMatrix vconcat(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss). Requires a square matrix.
Integer determinant(const IntMatrix& m);
/// Rank over Q.
std::size_t rank(const IntMatrix& m);

struct HermiteResult {
  IntMatrix hnf;        // m * transform == hnf
  IntMatrix transform;  // unimodular
  std::size_t rank = 0;
};

/// Column-style HNF: lower-triangular column echelon form, positive pivots,
/// entries left of each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
  /// d_1 | d_2 | ... | d_rank, all positive (units included).
  std::vector<Integer> invariant_factors;
  IntMatrix left_transform;   // unimodular, rows x rows
  IntMatrix right_transform;  // unimodular, cols x cols
  std::size_t rank = 0;

  /// The diagonal matrix left * m * right.
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Generators (columns) of (Q-span of the columns) ∩ Z^ambient_rank, in
/// column HNF so the result is canonical.
IntMatrix saturate(const IntMatrix& sublattice, std::size_t ambient_rank);

struct QuotientBasis {
  std::size_t ambient_rank = 0;
  IntMatrix sublattice_generators;
  /// quotient_rank x ambient_rank, surjective, kernel == sublattice.
  IntMatrix projection;
  std::size_t quotient_rank = 0;
};

/// Throws NotSaturated when Z^n / sublattice has torsion.
QuotientBasis quotient_basis(const IntMatrix& sublattice, std::size_t ambient_rank);

/// Fixed-length vector over F2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  BitVector(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v) {
    if (v)
      words_[i / 64] |= (std::uint64_t{1} << (i % 64));
    else
      words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  void flip(std::size_t i) { words_[i / 64] ^= (std::uint64_t{1} << (i % 64)); }
  BitVector& operator^=(const BitVector& o);
  bool any() const;
  std::string to_string() const;

  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Some x with (m mod 2) x == rhs over F2, or nullopt when insoluble.
std::optional<BitVector> f2_solve(const IntMatrix& m, const BitVector& rhs);
std::size_t f2_rank(const IntMatrix& m);

/// Rational solve of m x == rhs. Returns nullopt when there is no solution;
/// `unique` is set to false when the solution space is positive-dimensional.
struct RationalSolution {
  RatVector x;
  bool unique = true;
};
std::optional<RationalSolution> solve_rational(const std::vector<RatVector>& m, const RatVector& rhs);

namespace testing {
/// Negative-control hook: when enabled, smith_normal_form doubles its last
/// invariant factor. Only for exercising the acceptance suite.
void set_snf_fault(bool enabled);
bool snf_fault_enabled();
}  // namespace testing

}  // namespace tropcount::lattice
