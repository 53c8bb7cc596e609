#pragma once

// Scalar and vector vocabulary shared by every tropcount module, plus the
// single exception type the library throws.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropcount {

using Integer = mpz_class;
using Rational = mpq_class;

/// Small integer vectors: primitive directions, weighted end vectors.
using LatticeVector = std::vector<std::int64_t>;
/// Exact points of Q^n.
using RatVector = std::vector<Rational>;

enum class ErrorCode {
  InputError,
  DegenerateEdge,
  NonTrivalent,
  NotSaturated,
  InfiniteCokernel,
  NonIntegralBase,
  ConstraintOnVertex,
  ConstraintMissed,
  NonGenericInput,
  NonGenericCrossing,
  InvalidZeta,
  UnsupportedGenus,
  GenericityFailure,
  NotGood,
  InternalMismatch,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" (or "p" when integral) representation.
std::string format_rational(const Rational& q);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// gcd of all coordinates (non-negative); 0 for the zero vector.
std::int64_t content(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
bool is_zero(const LatticeVector& v);

/// Turns a nonzero rational vector into (primitive integer direction, scale)
/// with v == scale * direction and scale > 0.
struct PrimitiveDecomposition {
  LatticeVector direction;
  Rational scale;
};
PrimitiveDecomposition primitive_decomposition(const RatVector& v);

RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);

/// Lexicographic comparison on exact coordinates.
bool lex_less(const RatVector& a, const RatVector& b);

std::string format_vector(const LatticeVector& v);
std::string format_vector(const RatVector& v);

}  // namespace tropcount
