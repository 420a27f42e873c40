#include <doctest.h>

#include "oracles.hpp"
#include "sheet_atlas/matrix.hpp"

using namespace sheet_atlas;

namespace {

RationalMatrix random_matrix(oracle::Rng& rng, std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.small_rational();
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rank({{Rational(1, 2), 1, 0}, {0, 0, Rational(1, 3)}, {1, 2, 1}}) == 2);
  CHECK(rank({}) == 0);
  CHECK(rank({{0, 1, 0, 0}, {0, 0, 0, 1}}) == 2);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RationalMatrix m = random_matrix(rng, n);
    std::vector<std::vector<RationalPoly>> rows(n, std::vector<RationalPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = RationalPoly(m(i, j));
    CHECK(RationalPoly(determinant(m)) == oracle::cofactor_det(rows));
  }
}

TEST_CASE("inverse and rank of random matrices") {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    const RationalMatrix m = random_matrix(rng, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    const bool singular = determinant(m) == 0;
    CHECK((rank(rows) == n) == !singular);
    if (!singular) CHECK(m * inverse(m) == RationalMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(RationalMatrix(2)), DomainError);
}

TEST_CASE("matrix basics") {
  const RationalMatrix a{{1, 2}, {3, 4}};
  CHECK(a.transpose() == RationalMatrix{{1, 3}, {2, 4}});
  CHECK(a.trace() == 5);
  CHECK(a * RationalMatrix::identity(2) == a);
  CHECK(Rational(2) * a == a + a);
  CHECK_THROWS_AS(a * RationalMatrix(3), DomainError);
  CHECK(substitute(lift(a), Rational(5)) == a);
}
