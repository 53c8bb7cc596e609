#include "tropcount/types.hpp"

#include <numeric>
#include <sstream>

namespace tropcount {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InputError: return "InputError";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::NonTrivalent: return "NonTrivalent";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::InfiniteCokernel: return "InfiniteCokernel";
    case ErrorCode::NonIntegralBase: return "NonIntegralBase";
    case ErrorCode::ConstraintOnVertex: return "ConstraintOnVertex";
    case ErrorCode::ConstraintMissed: return "ConstraintMissed";
    case ErrorCode::NonGenericInput: return "NonGenericInput";
    case ErrorCode::NonGenericCrossing: return "NonGenericCrossing";
    case ErrorCode::InvalidZeta: return "InvalidZeta";
    case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::NotGood: return "NotGood";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::InputError, "empty rational");
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return part;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
    throw Error(ErrorCode::InputError, "malformed rational '" + s + "'");
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw Error(ErrorCode::InputError, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t content(const LatticeVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd64(g, x);
  return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

bool is_zero(const LatticeVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

PrimitiveDecomposition primitive_decomposition(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> num;
  num.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer k = x.get_num() * (den / x.get_den());
    g = gcd(g, k);
    num.push_back(k);
  }
  if (g == 0) throw Error(ErrorCode::DegenerateEdge, "zero vector has no direction");
  PrimitiveDecomposition out;
  out.direction.reserve(v.size());
  for (const auto& k : num) {
    Integer c = k / g;
    if (!c.fits_slong_p()) throw Error(ErrorCode::InputError, "direction coordinate too large");
    out.direction.push_back(c.get_si());
  }
  out.scale = Rational(g, den);
  out.scale.canonicalize();
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::string format_vector(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format_vector(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace tropcount
