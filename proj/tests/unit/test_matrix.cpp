#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "maxplus/matrix.hpp"
#include "support.hpp"

using namespace maxplus;

TEST_CASE("identity and zero matrices", "[matrix]") {
  std::mt19937_64 rng(21);
  const Matrix a = testgen::random_matrix(rng, 4);
  CHECK(mat_equal(mat_mul(identity_matrix(4), a), a));
  CHECK(mat_equal(mat_mul(a, identity_matrix(4)), a));
  CHECK(mat_equal(mat_mul(a, zero_matrix(4)), zero_matrix(4)));
  CHECK(mat_equal(mat_oplus(a, zero_matrix(4)), a));
}

TEST_CASE("hand-expanded 2x2 products", "[matrix]") {
  const Matrix swap = parse_matrix("2\n-inf 0\n0 -inf\n");
  CHECK(mat_equal(mat_mul(swap, swap), parse_matrix("2\n0 -inf\n-inf 0\n")));
  const Matrix a = parse_matrix("2\n-1 0\n0 -2\n");
  CHECK(mat_power(a, 3)(0, 0) == MaxPlus(-1));
  CHECK(mat_equal(mat_power(a, 1), a));
}

TEST_CASE("powers match the walk oracle", "[matrix][oracle]") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 5;
    const Matrix a = testgen::random_matrix(rng, n);
    Matrix iterated = a;
    for (int t = 1; t <= 20; ++t) {
      if (t > 1) iterated = mat_mul(iterated, a);
      const Matrix p = mat_power(a, t);
      CHECK(mat_equal(p, iterated));
      CHECK(mat_equal(p, oracle::power(a, t)));
    }
  }
  CHECK_THROWS_AS(mat_power(identity_matrix(2), 0), std::invalid_argument);
}

TEST_CASE("matrix semiring laws", "[matrix][property]") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 4;
    const Matrix a = testgen::random_matrix(rng, n), b = testgen::random_matrix(rng, n),
                 c = testgen::random_matrix(rng, n);
    CHECK(mat_equal(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))));
    CHECK(mat_equal(mat_mul(a, mat_oplus(b, c)), mat_oplus(mat_mul(a, b), mat_mul(a, c))));
    CHECK(mat_equal(mat_mul(a, b), oracle::product(a, b)));
    CHECK(mat_equal(transpose(mat_mul(a, b)), mat_mul(transpose(b), transpose(a))));
  }
}

TEST_CASE("shape mismatches are rejected", "[matrix]") {
  const Matrix a = zero_matrix(2), b = zero_matrix(3);
  CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mat_oplus(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mat_equal(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mat_power(Matrix(2, 3), 2), std::invalid_argument);
}

TEST_CASE("Kleene star", "[matrix]") {
  CHECK(mat_equal(kleene_star(zero_matrix(3)), identity_matrix(3)));
  CHECK(mat_equal(kleene_star(parse_matrix("2\n-inf -1\n-1 -inf\n")), parse_matrix("2\n0 -1\n-1 0\n")));
  CHECK_THROWS_AS(kleene_star(parse_matrix("1\n1/2\n")), std::domain_error);

  std::mt19937_64 rng(24);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 5;
    const Matrix raw = testgen::random_cyclic_matrix(rng, n);
    const Matrix a = scalar_times(negate(oracle::wrap(oracle::max_cycle_mean(raw))), raw);
    Matrix expected = identity_matrix(n);
    for (int t = 1; t < n; ++t) expected = mat_oplus(expected, oracle::power(a, t));
    CHECK(mat_equal(kleene_star(a), expected));
  }
}

TEST_CASE("diagonal scaling", "[matrix]") {
  std::mt19937_64 rng(25);
  const Matrix a = testgen::random_matrix(rng, 4);
  CHECK(mat_equal(scale(a, DiagonalScaling::identity(4)), a));
  const DiagonalScaling d({Rational(1, 2), Rational(-3), Rational(0), Rational(7, 3)});
  CHECK(mat_equal(scale(scale(a, d), d.inverse()), a));
  const Matrix s = scale(a, d);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a(i, j).is_finite()) CHECK(s(i, j).value() == -d[i] + a(i, j).value() + d[j]);
}

TEST_CASE("strict domination", "[matrix]") {
  std::mt19937_64 rng(26);
  const Matrix b = testgen::random_matrix(rng, 3);
  CHECK(strictly_dominated_by(zero_matrix(3), b));
  Matrix single = zero_matrix(2);
  single(0, 1) = MaxPlus(0);
  CHECK_FALSE(strictly_dominated_by(single, single));
  Matrix lower = zero_matrix(2);
  lower(0, 1) = MaxPlus(-1);
  CHECK(strictly_dominated_by(lower, single));
  CHECK_FALSE(strictly_dominated_by(single, lower));
}

TEST_CASE("matrix text round trip is exact", "[matrix][io]") {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = testgen::random_matrix(rng, 1 + k % 6);
    CHECK(mat_equal(parse_matrix(to_text(a)), a));
    CHECK(to_text(parse_matrix(to_text(a))) == to_text(a));
  }
}

TEST_CASE("malformed matrix text is rejected", "[matrix][io]") {
  for (const char* bad : {"", "x\n", "0\n", "2\n0 0\n", "2\n0 0\n0\n", "2\n0 0 0\n0 0\n", "2\n0 0\n0 0\n0 0\n",
                          "2\n0 q\n0 0\n", "-1\n"})
    CHECK_THROWS_AS(parse_matrix(bad), std::invalid_argument);
  CHECK_THROWS(load_matrix("/nonexistent/matrix.txt"));
  CHECK(mat_equal(parse_matrix("1\n*\n"), zero_matrix(1)));
}
