#include <doctest.h>

#include <random>

#include "tropcount/exact_lattice.hpp"

using namespace tropcount;
using namespace tropcount::lattice;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

void check_snf_witness(const IntMatrix& m, const SnfResult& s) {
  CHECK(is_unimodular(s.left_transform));
  CHECK(is_unimodular(s.right_transform));
  CHECK(s.left_transform * m * s.right_transform == s.diagonal(m.rows(), m.cols()));
  for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
    CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  for (const auto& d : s.invariant_factors) CHECK(d > 0);
}

}  // namespace

TEST_CASE("hnf: identity, upper example, zero") {
  auto id = hermite_normal_form({{1, 0}, {0, 1}});
  CHECK(id.hnf == IntMatrix{{1, 0}, {0, 1}});

  IntMatrix m{{2, 4}, {0, 2}};
  auto h = hermite_normal_form(m);
  CHECK(h.hnf(0, 0) == 2);
  CHECK(h.hnf(1, 1) == 2);
  CHECK(h.hnf(0, 1) == 0);
  CHECK(h.hnf(1, 0) >= 0);
  CHECK(h.hnf(1, 0) < 2);
  CHECK(m * h.transform == h.hnf);
  CHECK(is_unimodular(h.transform));

  auto z = hermite_normal_form(IntMatrix(2, 2));
  CHECK(z.hnf.is_zero());
  CHECK(z.rank == 0);
}

TEST_CASE("hnf: random shapes keep the echelon conventions") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    auto h = hermite_normal_form(m);
    REQUIRE(m * h.transform == h.hnf);
    CHECK(is_unimodular(h.transform));
    CHECK(h.rank == rank(m));
    // Pivot rows strictly increase; entries left of a pivot are reduced.
    std::size_t last_row = 0;
    for (std::size_t k = 0; k < h.rank; ++k) {
      std::size_t pr = 0;
      while (pr < r && h.hnf(pr, k) == 0) ++pr;
      REQUIRE(pr < r);
      if (k) CHECK(pr > last_row);
      last_row = pr;
      CHECK(h.hnf(pr, k) > 0);
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(h.hnf(pr, j) >= 0);
        CHECK(h.hnf(pr, j) < h.hnf(pr, k));
      }
    }
    for (std::size_t k = h.rank; k < c; ++k)
      for (std::size_t i = 0; i < r; ++i) CHECK(h.hnf(i, k) == 0);
  }
}

TEST_CASE("snf: small examples") {
  auto a = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(a.invariant_factors == std::vector<Integer>{1, 6});
  auto b = smith_normal_form(IntMatrix::identity(3));
  CHECK(b.invariant_factors == std::vector<Integer>{1, 1, 1});
  auto c = smith_normal_form({{2, 0}, {0, 2}});
  CHECK(c.invariant_factors == std::vector<Integer>{2, 2});
  check_snf_witness(IntMatrix{{2, 0}, {0, 3}}, a);
}

TEST_CASE("snf: witnesses and determinant on random matrices") {
  std::mt19937 rng(5);
  for (int it = 0; it < 300; ++it) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    auto s = smith_normal_form(m);
    check_snf_witness(m, s);
    CHECK(s.rank == rank(m));
    if (r == c && s.rank == r) {
      Integer prod = 1;
      for (const auto& d : s.invariant_factors) prod *= d;
      CHECK(prod == abs(determinant(m)));
    }
  }
}

TEST_CASE("kernel lemma restated as F2 nullity") {
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 500) {
    std::size_t n = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, n, n, -9, 9);
    if (determinant(m) == 0) continue;
    ++tested;
    auto s = smith_normal_form(m);
    std::size_t even = 0;
    for (const auto& d : s.invariant_factors)
      if (mpz_even_p(d.get_mpz_t())) ++even;
    CHECK(even == n - f2_rank(m));
  }
}

TEST_CASE("saturate") {
  CHECK(saturate(IntMatrix{{2}, {0}}, 2) == IntMatrix{{1}, {0}});
  CHECK(saturate(IntMatrix{{2}, {2}}, 2) == IntMatrix{{1}, {1}});
  CHECK(saturate(IntMatrix{{1, 0}, {0, 2}}, 2) == IntMatrix::identity(2));
  CHECK(saturate(IntMatrix(2, 0), 2).cols() == 0);

  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    std::size_t n = 1 + rng() % 5, k = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, n, k, -6, 6);
    IntMatrix s = saturate(m, n);
    CHECK(s.cols() == rank(m));
    CHECK(saturate(s, n) == s);
    CHECK(rank(s.hconcat(m)) == s.cols());
    if (s.cols()) {
      auto q = quotient_basis(s, n);
      CHECK((q.projection * m).is_zero());
      CHECK(q.quotient_rank == n - s.cols());
    }
  }
}

TEST_CASE("quotient_basis") {
  auto q = quotient_basis(IntMatrix{{-1}, {0}}, 2);
  CHECK(q.quotient_rank == 1);
  CHECK((q.projection * IntMatrix{{-1}, {0}}).is_zero());
  // Surjective: the projection of (0,1) generates Z.
  CHECK(abs(q.projection(0, 1)) == 1);

  auto z = quotient_basis(IntMatrix(2, 0), 2);
  CHECK(z.projection == IntMatrix::identity(2));
  auto full = quotient_basis(IntMatrix::identity(2), 2);
  CHECK(full.quotient_rank == 0);

  CHECK_THROWS_AS(quotient_basis(IntMatrix{{2}, {0}}, 2), Error);
  try {
    quotient_basis(IntMatrix{{2}, {0}}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSaturated);
  }
}

TEST_CASE("quotient projection is surjective with exact kernel") {
  std::mt19937 rng(17);
  for (int it = 0; it < 150; ++it) {
    std::size_t n = 2 + rng() % 4, k = 1 + rng() % (n - 1);
    IntMatrix s = saturate(random_matrix(rng, n, k, -5, 5), n);
    auto q = quotient_basis(s, n);
    // [generators | any lift of the quotient basis] is unimodular iff the
    // projection is onto with kernel exactly span(s).
    auto snf = smith_normal_form(q.projection);
    for (const auto& d : snf.invariant_factors) CHECK(d == 1);
    CHECK(snf.rank == q.quotient_rank);
    CHECK((q.projection * s).is_zero());
  }
}

TEST_CASE("f2 solve and rank") {
  CHECK_FALSE(f2_solve(IntMatrix{{2}}, BitVector{1}).has_value());
  auto x = f2_solve(IntMatrix::identity(2), BitVector{1, 1});
  REQUIRE(x.has_value());
  CHECK(*x == BitVector{1, 1});
  CHECK_FALSE(f2_solve(IntMatrix{{1, 1}, {1, 1}}, BitVector{1, 0}).has_value());
  CHECK(f2_solve(IntMatrix{{1, 1}, {1, 1}}, BitVector{1, 1}).has_value());

  CHECK(f2_rank(IntMatrix{{2, 0}, {0, 3}}) == 1);
  CHECK(f2_rank(IntMatrix::identity(4)) == 4);
  CHECK(f2_rank(IntMatrix{{2, 4}, {6, -8}}) == 0);
}

TEST_CASE("f2 solutions actually solve") {
  std::mt19937 rng(99);
  for (int it = 0; it < 300; ++it) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    IntMatrix m = random_matrix(rng, r, c, -3, 3);
    BitVector rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs.set(i, rng() & 1);
    auto x = f2_solve(m, rhs);
    // Brute-force membership over all 2^c inputs.
    bool exists = false;
    for (std::uint32_t mask = 0; mask < (1u << c) && !exists; ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < c; ++j)
          if ((mask >> j) & 1) acc += mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
        ok = (acc & 1) == static_cast<int>(rhs.get(i));
      }
      exists = ok;
    }
    CHECK(exists == x.has_value());
    if (x) {
      for (std::size_t i = 0; i < r; ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (x->get(j) && mpz_odd_p(m(i, j).get_mpz_t())) ++acc;
        CHECK((acc & 1) == static_cast<int>(rhs.get(i)));
      }
    }
  }
}

TEST_CASE("rational solve") {
  std::vector<RatVector> m{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  auto s = solve_rational(m, {Rational(5), Rational(6)});
  REQUIRE(s.has_value());
  CHECK(s->unique);
  CHECK(s->x[0] == Rational(-4));
  CHECK(s->x[1] == Rational(9, 2));

  std::vector<RatVector> sing{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  CHECK_FALSE(solve_rational(sing, {Rational(1), Rational(3)}).has_value());
  auto under = solve_rational(sing, {Rational(1), Rational(2)});
  REQUIRE(under.has_value());
  CHECK_FALSE(under->unique);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}
