#include <doctest.h>

#include <random>

#include "eqlines/exactlin.hpp"

using namespace eqlines;

namespace {

// Cofactor expansion along the first row; exponential, used only as an oracle.
Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const Integer term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Faddeev-LeVerrier over Q, ascending coefficients of det(xI - m).
std::vector<Rational> leverrier(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<Rational> mk(n * n, Rational(0));  // M_0 = 0
  std::vector<Rational> am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<Rational> next(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += Rational(m(i, t)) * mk[t * n + j];
        next[i * n + j] = s + (i == j ? c[n - k + 1] : Rational(0));
      }
    }
    mk = next;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < n; ++t) tr += Rational(m(i, t)) * mk[t * n + i];
    }
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

IntMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  auto m = random_matrix(n, n, rng);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) m(r, c) = m(c, r);
  }
  return m;
}

IntMatrix all_ones(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = 1;
  }
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = random_matrix(n, n, rng);
    REQUIRE(determinant(m) == laplace_det(m));
  }
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 0}, {0, 5}}) == 0);
  CHECK(determinant(IntMatrix::identity(7)) == 1);
}

TEST_CASE("rank and nullity") {
  CHECK(rank(IntMatrix::identity(3)) == 3);
  CHECK(rank(all_ones(4)) == 1);
  CHECK(rank(IntMatrix(3, 5)) == 0);
  CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
  CHECK(rank(IntMatrix{{1, 2, 3, 4}, {0, 1, 1, 1}}) == 2);
  // J4 has eigenvalues 4 and 0 (x3).
  CHECK(nullity_at(all_ones(4), 0) == 3);
  CHECK(nullity_at(all_ones(4), 4) == 1);
  CHECK(nullity_at(all_ones(4), 1) == 0);
  CHECK_THROWS(nullity_at(IntMatrix(2, 3), 0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(4, 2, rng);
    const auto b = random_matrix(2, 5, rng);
    REQUIRE(rank(a * b) <= 2);
    REQUIRE(rank(a.transpose()) == rank(a));
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(IntMatrix{{0, 1}, {1, 0}}) == IntPolynomial{-1, 0, 1});
  // Triangle graph adjacency: (x - 2)(x + 1)^2.
  const IntMatrix triangle{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(char_poly(triangle) == IntPolynomial::linear(2) * IntPolynomial::linear(-1).pow(2));
  CHECK(char_poly(IntMatrix::identity(4)) == IntPolynomial::linear(1).pow(4));
  CHECK(char_poly(IntMatrix(3, 3)) == IntPolynomial{0, 0, 0, 1});

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto m = random_matrix(n, n, rng);
    const auto p = char_poly(m);
    const auto oracle = leverrier(m);
    REQUIRE(p.degree() == static_cast<int>(n));
    for (std::size_t k = 0; k <= n; ++k) REQUIRE(Rational(p.coefficient(k)) == oracle[k]);
    // Invariants: monic, -trace, (-1)^n det.
    CHECK(p.leading() == 1);
    CHECK(p.coefficient(n - 1) == -m.trace());
    const Integer det = determinant(m);
    CHECK(p.coefficient(0) == (n % 2 == 0 ? det : Integer(-det)));
  }
}

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p = IntPolynomial::linear(3) * IntPolynomial::linear(-2);  // x^2 - x - 6
  CHECK(p == IntPolynomial{-6, -1, 1});
  CHECK(p.evaluate(3) == 0);
  CHECK(p.evaluate(0) == -6);
  REQUIRE(p.divide_by_linear(3).has_value());
  CHECK(*p.divide_by_linear(3) == IntPolynomial::linear(-2));
  CHECK_FALSE(p.divide_by_linear(1).has_value());
  CHECK(p.to_string() == "x^2 - x - 6");
  CHECK(IntPolynomial{107, -24, 1}.to_string() == "x^2 - 24x + 107");
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial::linear(1).pow(0) == IntPolynomial{1});
}

TEST_CASE("rational solves") {
  const IntMatrix m{{2, 1}, {1, 3}};
  const std::vector<Rational> rhs{Rational(1), Rational(2)};
  const auto x = solve_rational(m, rhs);
  CHECK(x[0] == Rational(1, 5));
  CHECK(x[1] == Rational(3, 5));
  CHECK(multiply(m, x) == rhs);

  CHECK_THROWS_AS(solve_rational(all_ones(3), std::vector<Rational>(3, Rational(1))), SingularMatrixError);

  const auto general = solve_rational_general(all_ones(3), std::vector<Rational>(3, Rational(2)));
  REQUIRE(general.has_value());
  CHECK(multiply(all_ones(3), *general) == std::vector<Rational>(3, Rational(2)));
  const std::vector<Rational> bad{Rational(1), Rational(2), Rational(1)};
  CHECK_FALSE(solve_rational_general(all_ones(3), bad).has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(5, 5, rng);
    if (determinant(a) == 0) continue;
    std::vector<Rational> b(5);
    for (auto& v : b) {
      v = Rational(static_cast<long>(rng() % 17) - 8, 1 + static_cast<long>(rng() % 5));
      v.canonicalize();
    }
    REQUIRE(multiply(a, solve_rational(a, b)) == b);
  }
}

TEST_CASE("adjugate identity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto m = trial % 2 ? random_symmetric(n, rng) : random_matrix(n, n, rng);
    if (laplace_det(m) == 0) {
      CHECK_THROWS_AS(adjugate(m), SingularMatrixError);
      continue;
    }
    const auto adj = adjugate(m);
    CHECK(adj.determinant == laplace_det(m));
    IntMatrix scaled = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = adj.determinant;
    CHECK(adj.adjugate * m == scaled);
    CHECK(m * adj.adjugate == scaled);
  }
  CHECK_THROWS_AS(adjugate(all_ones(2)), SingularMatrixError);
  const auto small = adjugate(IntMatrix{{2, 1}, {1, 3}});
  CHECK(small.determinant == 5);
  CHECK(small.adjugate == IntMatrix{{3, -1}, {-1, 2}});
}
