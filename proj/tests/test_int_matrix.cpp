#include <doctest.h>

#include "twistcalc/int_matrix.hpp"

using twistcalc::Integer;
using twistcalc::IntMatrix;

TEST_CASE("identity and scalar predicates") {
  const auto i3 = IntMatrix::identity(3);
  CHECK(i3.is_identity());
  CHECK(i3.is_scalar(1));
  CHECK((-i3).is_scalar(-1));
  CHECK_FALSE((-i3).is_identity());
  CHECK(IntMatrix(2, 3).is_zero());
}

TEST_CASE("products and powers") {
  const auto a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == IntMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(power(a, 0).is_identity());
  CHECK(power(a, 3) == a * a * a);
  CHECK(a.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
}

TEST_CASE("rank over the rationals") {
  CHECK(IntMatrix(3, 3).rank() == 0);
  CHECK(IntMatrix::identity(4).rank() == 4);
  CHECK(IntMatrix::from_rows({{2, 4}, {1, 2}}).rank() == 1);
  CHECK(IntMatrix::from_rows({{0, 0, 3}, {0, 2, 0}, {0, 4, 6}}).rank() == 2);
  CHECK(IntMatrix::from_rows({{72, 16, 0, 0}, {-32, -8, 0, 0}, {0, 0, 72, 16}, {0, 0, -32, -8}}).rank() == 4);
}

TEST_CASE("entries beyond 64 bits stay exact") {
  IntMatrix m = IntMatrix::identity(2);
  m(0, 1) = Integer("340282366920938463463374607431768211456");
  const auto sq = m * m;
  CHECK(sq(0, 1) == Integer("680564733841876926926749214863536422912"));
  CHECK(sq(0, 0) == 1);
}

TEST_CASE("csv rendering") {
  CHECK(IntMatrix::from_rows({{0, -1}, {1, 0}}).to_csv() == "0,-1\n1,0\n");
}
