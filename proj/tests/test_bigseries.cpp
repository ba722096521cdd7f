#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle_helpers.hpp"
#include "permgf/bigseries.hpp"

using namespace permgf;

TEST_CASE("monomial construction") {
  CHECK(BiSeries::monomial(1, 0, 0, 10) == BiSeries::one(10));
  const BiSeries xy3 = BiSeries::monomial(1, 1, 3, 10);
  CHECK(xy3.coeff(1, 3) == 1);
  CHECK(xy3.term_count() == 1);
  CHECK(BiSeries::monomial(5, 11, 0, 10).is_zero());  // beyond the order
  CHECK(BiSeries::monomial(0, 2, 2, 10).is_zero());
  CHECK_THROWS_AS(BiSeries::monomial(1, -1, 0, 5), std::invalid_argument);
}

TEST_CASE("mul truncates and add/negate cancel") {
  const BiSeries one_plus_x =
      add(BiSeries::one(1), BiSeries::monomial(1, 1, 0, 1));
  const BiSeries sq = mul(one_plus_x, one_plus_x);
  CHECK(sq.coeff(0, 0) == 1);
  CHECK(sq.coeff(1, 0) == 2);  // the x^2 term fell off the order-1 truncation
  CHECK(sq.term_count() == 2);

  const BiSeries xy = BiSeries::monomial(1, 1, 1, 5);
  const BiSeries xy_sq = mul(xy, xy);
  CHECK(xy_sq.coeff(2, 2) == 1);
  CHECK(xy_sq.term_count() == 1);

  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const BiSeries s = oracle::random_series(rng, 5);
    CHECK(add(s, negate(s)).is_zero());
    CHECK(sub(s, s).is_zero());
  }
}

TEST_CASE("operand compatibility is enforced") {
  CHECK_THROWS_AS(add(BiSeries::one(3), BiSeries::one(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(mul(BiSeries::one(3), BiSeries::one(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(mul(BiSeries::one(3, 5), BiSeries::one(3)),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const BiSeries a = oracle::random_series(rng, 5);
    const BiSeries b = oracle::random_series(rng, 5);
    const BiSeries c = oracle::random_series(rng, 5);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
  }
}

TEST_CASE("reciprocal_unit: geometric series and random inverses") {
  // 1 - x  ->  1 + x + x^2 + x^3 + x^4
  const BiSeries a =
      sub(BiSeries::one(4), BiSeries::monomial(1, 1, 0, 4));
  const BiSeries inv = reciprocal_unit(a);
  for (int n = 0; n <= 4; ++n) CHECK(inv.coeff(n, 0) == 1);
  CHECK(inv.term_count() == 5);

  // 1 - x y  ->  1 + xy + x^2 y^2 + x^3 y^3
  const BiSeries b =
      sub(BiSeries::one(3), BiSeries::monomial(1, 1, 1, 3));
  const BiSeries invb = reciprocal_unit(b);
  for (int n = 0; n <= 3; ++n) CHECK(invb.coeff(n, n) == 1);
  CHECK(invb.term_count() == 4);

  CHECK(reciprocal_unit(BiSeries::one(6)) == BiSeries::one(6));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const BiSeries s = oracle::random_series(rng, 6, /*admissible_unit=*/true);
    CHECK(mul(s, reciprocal_unit(s)) == BiSeries::one(6));
    CHECK(reciprocal_unit(s) == reciprocal_unit_serial(s));
  }
}

TEST_CASE("reciprocal_unit preconditions") {
  CHECK_THROWS_WITH_AS(reciprocal_unit(BiSeries::monomial(2, 0, 0, 3)),
                       doctest::Contains("constant term"),
                       std::invalid_argument);
  CHECK_THROWS_AS(reciprocal_unit(BiSeries(3)), std::invalid_argument);
  const BiSeries bad =
      add(BiSeries::one(3), BiSeries::monomial(1, 0, 2, 3));
  CHECK_THROWS_WITH_AS(reciprocal_unit(bad), doctest::Contains("y-degree"),
                       std::invalid_argument);
}

TEST_CASE("y_slice and eval_y_one") {
  const BiSeries s = add(BiSeries::one(3), BiSeries::monomial(1, 1, 1, 3));
  const auto slice1 = s.y_slice(1);
  CHECK(slice1 == std::vector<Int>{0, 1, 0, 0});
  CHECK(BiSeries(4).y_slice(5) == std::vector<Int>(5, 0));

  // 1 + x y + x y^2 -> (1, 2)
  const BiSeries t = add(s, BiSeries::monomial(1, 1, 2, 3));
  const auto sums = t.eval_y_one();
  CHECK(sums[0] == 1);
  CHECK(sums[1] == 2);
  CHECK(BiSeries(2).eval_y_one() == std::vector<Int>(3, 0));
}

TEST_CASE("truncation consistency") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const BiSeries a = oracle::random_series(rng, 6);
    const BiSeries b = oracle::random_series(rng, 6);
    const BiSeries u = oracle::random_series(rng, 6, /*admissible_unit=*/true);
    for (std::int64_t m : {0, 2, 4}) {
      CHECK(mul(a, b).truncated(m) == mul(a.truncated(m), b.truncated(m)));
      CHECK(add(a, b).truncated(m) == add(a.truncated(m), b.truncated(m)));
      CHECK(reciprocal_unit(u).truncated(m) ==
            reciprocal_unit(u.truncated(m)));
    }
  }
  CHECK_THROWS_AS(BiSeries::one(3).truncated(4), std::invalid_argument);
  CHECK_THROWS_AS(BiSeries::one(3).padded(2), std::invalid_argument);
}

TEST_CASE("parallel and serial multiplication agree") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BiSeries a = oracle::random_series(rng, 7);
    const BiSeries b = oracle::random_series(rng, 7);
    CHECK(mul(a, b) == mul_serial(a, b));
  }
}

TEST_CASE("y-cap keeps retained slices exact") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    // rebuild the random operands under a cap and compare low slices
    const BiSeries a = oracle::random_series(rng, 5);
    const BiSeries b = oracle::random_series(rng, 5);
    const std::int64_t cap = 4;
    std::vector<BiSeries::Layer> la, lb;
    for (std::int64_t n = 0; n <= 5; ++n) {
      la.push_back(a.layer(n));
      lb.push_back(b.layer(n));
    }
    const BiSeries ac = BiSeries::from_layers(5, cap, la);
    const BiSeries bc = BiSeries::from_layers(5, cap, lb);
    const BiSeries full = mul(a, b);
    const BiSeries capped = mul(ac, bc);
    CHECK(capped.y_cap() == cap);
    for (std::int64_t r = 0; r <= cap; ++r) {
      CHECK(full.y_slice(r) == capped.y_slice(r));
    }
  }
}

TEST_CASE("times_monomial and padding") {
  const BiSeries s = add(BiSeries::one(4), BiSeries::monomial(3, 2, 1, 4));
  const BiSeries shifted = s.times_monomial(2, 1, 2);
  CHECK(shifted.coeff(1, 2) == 2);
  CHECK(shifted.coeff(3, 3) == 6);
  CHECK(shifted.term_count() == 2);
  const BiSeries wide = s.padded(6);
  CHECK(wide.order_x() == 6);
  CHECK(wide.coeff(2, 1) == 3);
  CHECK(wide.layer(6).empty());
}
