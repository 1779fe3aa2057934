#include <catch_amalgamated.hpp>

#include <random>

#include "ccm/field.hpp"
#include "ccm/rational_poly.hpp"

using namespace ccm;

TEST_CASE("prime field validates its modulus") {
  CHECK_THROWS_AS(PrimeField(1), error);
  CHECK_THROWS_AS(PrimeField(9), error);
  CHECK_NOTHROW(PrimeField(2147483647u));
  PrimeField f(7);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(0) == 0);
  CHECK(f.pow(3, 6) == 1);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 65521u, 2147483647u}) {
    PrimeField f(p);
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    for (int t = 0; t < 200; ++t) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(2, 2)) == 2);
  CHECK(rank(Matrix(3, 4, 5)) == 0);
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}}, 2, 5)) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(3, 5)).cols() == 0);
  CHECK(kernel_basis(Matrix(2, 3, 7)).cols() == 3);
  const auto k = kernel_basis(Matrix::from_rows({{1, 1}}, 2, 2));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == 1);
  CHECK(k(1, 0) == 1);
}

TEST_CASE("rank plus nullity equals column count; kernel vectors are killed") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 3u, 13u}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = rng() % 6, c = rng() % 6;
      auto m = Matrix::random(r, c, p, rng);
      // Make low-rank cases common.
      if (r > 1 && t % 2 == 0)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);
      const auto k = kernel_basis(m);
      CHECK(rank(m) + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
    }
  }
}

TEST_CASE("solve and inverse") {
  const auto a = Matrix::from_rows({{2, 1}, {1, 1}}, 2, 5);
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2, 5));
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, 2, 5)).has_value());
  const auto b = Matrix::from_rows({{1}, {0}}, 1, 5);
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}, 2, 5), b).has_value());
}

TEST_CASE("kernel basis is in reduced echelon form") {
  const auto k = kernel_basis(Matrix::from_rows({{1, 0, 1, 0}, {0, 1, 1, 1}}, 4, 3));
  // Transposed columns must already be reduced: re-reducing changes nothing.
  const auto rows = k.transpose();
  CHECK(echelon(rows).reduced == rows);
}

TEST_CASE("interpolation examples") {
  auto line = interpolate({{2, 3}, {3, 4}});
  CHECK(line.degree() == 1);
  CHECK(line(Rational(0)) == 1);
  CHECK(line(Rational(1)) == 2);
  CHECK(interpolate({{2, 1}, {3, 1}, {5, 1}}).degree() == 0);
  auto quad = interpolate({{2, 7}, {3, 13}, {5, 31}});
  CHECK(quad.degree() == 2);
  CHECK(quad.to_string() == "q^2 + q + 1");
  CHECK_THROWS_AS(interpolate({{2, 1}, {2, 1}}), error);
  try {
    interpolate({{3, 1}, {3, 2}});
  } catch (const error& e) {
    CHECK(e.code() == errc::duplicate_abscissa);
  }
}

TEST_CASE("interpolation reproduces every input point") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::pair<std::int64_t, BigInt>> pts;
    const int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) pts.emplace_back(i * 3 - 5, BigInt(static_cast<std::int64_t>(rng() % 2001) - 1000));
    const auto poly = interpolate(pts);
    CHECK(poly.degree() < n);
    for (const auto& [x, y] : pts) CHECK(poly(Rational(x)) == Rational(y));
  }
}
