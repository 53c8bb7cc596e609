#include "tropcount/oracles.hpp"

#include <map>
#include <utility>
#include <vector>

namespace tropcount::oracles {

Integer kontsevich(int d) {
  if (d < 1) throw Error(ErrorCode::InputError, "degree must be positive");
  std::vector<Integer> n(d + 1, 0);
  n[1] = 1;
  auto binom = [](long a, long b) {
    Integer r;
    if (b < 0 || b > a) return Integer(0);
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
  };
  for (long e = 2; e <= d; ++e)
    for (long d1 = 1; d1 < e; ++d1) {
      const long d2 = e - d1;
      n[e] += n[d1] * n[d2] * (d1 * d1 * d2) * (d2 * binom(3 * e - 4, 3 * d1 - 2) - d1 * binom(3 * e - 4, 3 * d1 - 1));
    }
  return n[d];
}

namespace {

using Pt = std::pair<long, long>;
using Path = std::vector<Pt>;

long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

long gcdl(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long side(const Pt& a, const Pt& b) { return gcdl(b.first - a.first, b.second - a.second); }

struct Mults {
  Integer complex;
  Integer real;
};

class PathMultiplicity {
 public:
  // turn = +1 reduces left turns (target: the hypotenuse), −1 right turns.
  PathMultiplicity(int d, int turn, Path target) : d_(d), turn_(turn), target_(std::move(target)) {}

  Mults operator()(const Path& g) {
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    Mults m{0, 0};
    std::size_t j = 1;
    for (; j + 1 < g.size(); ++j) {
      const long c = cross(g[j - 1], g[j], g[j + 1]);
      if (turn_ * c > 0) break;
    }
    if (j + 1 >= g.size()) {
      if (g == target_) m = {1, 1};
    } else {
      const Pt& a = g[j - 1];
      const Pt& b = g[j];
      const Pt& c = g[j + 1];
      const long twice_area = turn_ * cross(a, b, c);
      const long s1 = side(a, b), s2 = side(b, c), s3 = side(a, c);

      Path shorter = g;
      shorter.erase(shorter.begin() + static_cast<long>(j));
      const Mults m1 = (*this)(shorter);
      m.complex += m1.complex * twice_area;
      if (s1 % 2 == 1 && s2 % 2 == 1 && s3 % 2 == 1) {
        // Pick: interior points of the triangle.
        const long interior = (twice_area - s1 - s2 - s3) / 2 + 1;
        m.real += m1.real * (interior % 2 == 0 ? 1 : -1);
      }

      const Pt flip{a.first + c.first - b.first, a.second + c.second - b.second};
      if (flip.first >= 0 && flip.second >= 0 && flip.first + flip.second <= d_) {
        Path other = g;
        other[j] = flip;
        const Mults m2 = (*this)(other);
        m.complex += m2.complex;
        if (s1 % 2 == 1 && s2 % 2 == 1) m.real += m2.real;
      }
    }
    memo_.emplace(g, m);
    return m;
  }

 private:
  int d_;
  int turn_;
  Path target_;
  std::map<Path, Mults> memo_;
};

}  // namespace

PathTotals lattice_path_oracle(int d) {
  if (d < 1 || d > 8) throw Error(ErrorCode::InputError, "lattice-path oracle supports 1 ≤ d ≤ 8");
  // λ-order: x ascending, then y descending.
  std::vector<Pt> order;
  for (long x = 0; x <= d; ++x)
    for (long y = d - x; y >= 0; --y) order.emplace_back(x, y);
  Path hypotenuse, legs;
  for (long x = 0; x <= d; ++x) hypotenuse.emplace_back(x, d - x);
  for (long y = d; y >= 0; --y) legs.emplace_back(0, y);
  for (long x = 1; x <= d; ++x) legs.emplace_back(x, 0);

  PathMultiplicity left(d, 1, hypotenuse), right(d, -1, legs);
  PathTotals out;
  const std::size_t inner = order.size() - 2;
  const std::size_t pick = static_cast<std::size_t>(3 * d - 2);
  if (pick > inner) return out;
  // Subsets of the inner points of size 3d−2, in λ-order.
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    Path g{order.front()};
    for (auto i : idx) g.push_back(order[i + 1]);
    g.push_back(order.back());
    const Mults l = left(g), r = right(g);
    out.complex += l.complex * r.complex;
    out.welschinger += l.real * r.real;
    ++out.paths;
    std::size_t k = pick;
    while (k > 0 && idx[k - 1] == inner - pick + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < pick; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace tropcount::oracles
