#include "permgf/cfengine.hpp"

#include <stdexcept>
#include <string>

namespace permgf {

namespace {

void check_k(std::int64_t k, std::int64_t least, const char* who) {
  if (k < least) {
    throw std::domain_error(std::string(who) + ": k must be >= " +
                            std::to_string(least) + ", got " +
                            std::to_string(k));
  }
}

void check_order(std::int64_t order) {
  if (order < 0) throw std::domain_error("truncation order must be >= 0");
}

}  // namespace

LevelExponents::LevelExponents(std::int64_t k, std::int64_t d)
    : k(k),
      d(d),
      e1(to_index(binomial(d, k - 1), "level exponent")),
      e2(to_index(binomial(d, k - 2), "level exponent")) {
  check_k(k, 1, "LevelExponents");
  if (d < 0) throw std::domain_error("LevelExponents: d must be >= 0");
}

std::pair<std::int64_t, std::int64_t> LevelExponents::substituted_exponents(
    std::int64_t d, std::int64_t m, std::int64_t k) {
  return {to_index(binomial(d, 1 - m), "substituted x-exponent"),
          to_index(binomial(d, k - m), "substituted y-exponent")};
}

std::int64_t level_exponent(std::int64_t i, std::int64_t k) {
  if (i < 1) throw std::domain_error("level_exponent: level must be >= 1");
  check_k(k, 1, "level_exponent");
  return to_index(binomial(i - 1, k - 1), "level exponent");
}

// Every fraction level carries exactly one factor of x, so levels deeper
// than `order` cannot reach any coefficient of x-degree <= order: seeding the
// tail with 1 at depth order+1 is exact. For the same reason level i only
// ever feeds coefficients of x-degree >= i-1 above it, so it can be computed
// at the reduced x-order (order - i + 1).
BiSeries cf_eval(std::int64_t order, const LevelExponentFn& exponent,
                 std::optional<std::int64_t> y_cap) {
  check_order(order);
  BiSeries tail = BiSeries::one(0, y_cap);
  for (std::int64_t i = order; i >= 1; --i) {
    const std::int64_t m = order - i + 1;
    BiSeries u = tail.padded(m).times_monomial(1, 1, exponent(i));
    tail = reciprocal_unit(sub(BiSeries::one(m, y_cap), u));
  }
  return tail;
}

BiSeries cf_F(std::int64_t k, std::int64_t order,
              std::optional<std::int64_t> y_cap) {
  check_k(k, 1, "cf_F");
  return cf_eval(
      order, [k](std::int64_t i) { return level_exponent(i, k); }, y_cap);
}

BiSeries cf_G(std::int64_t k, std::int64_t order,
              std::optional<std::int64_t> y_cap) {
  check_k(k, 1, "cf_G");
  BiSeries tail = cf_eval(
      order,
      [k](std::int64_t j) {
        return to_index(binomial(k - 1 + j, j), "level exponent");
      },
      y_cap);
  return tail.times_monomial(1, 0, 1);
}

BiSeries s_ladder(std::int64_t k, std::int64_t order,
                  std::optional<std::int64_t> y_cap) {
  check_k(k, 1, "s_ladder");
  check_order(order);
  BiSeries t = cf_G(k, order, y_cap);
  const BiSeries unit = BiSeries::one(order, y_cap);
  for (std::int64_t step = 0; step < k; ++step) {
    t = reciprocal_unit(sub(unit, t.times_monomial(1, 1, 0)));
  }
  return t;
}

// Backward recursion over levels d = order .. 0:
//   W^(d)     = 1 / (1 - x y^e1 W^(d+1))
//   Omega^(d) = x y^(e1 + 2 e2) (W^(d) - 1)^2 + x y^e1 (W^(d))^2 Omega^(d+1)
// with e1 = C(d, k-1), e2 = C(d, k-2). Both recursions multiply the deeper
// level by x, so seeding W with 1 and Omega with 0 below depth `order` is
// exact, and level d can run at the reduced x-order (order - d).
BiSeries omega_series(std::int64_t k, std::int64_t order,
                      std::optional<std::int64_t> y_cap) {
  check_k(k, 2, "omega_series");
  check_order(order);
  BiSeries w = BiSeries::one(0, y_cap);
  BiSeries om(0, y_cap);
  for (std::int64_t d = order; d >= 0; --d) {
    const std::int64_t m = order - d;
    const LevelExponents level(k, d);
    const BiSeries unit = BiSeries::one(m, y_cap);
    BiSeries w_next = reciprocal_unit(
        sub(unit, w.padded(m).times_monomial(1, 1, level.e1)));
    BiSeries bulge = sub(w_next, unit);
    BiSeries t1 =
        mul(bulge, bulge).times_monomial(1, 1, level.e1 + 2 * level.e2);
    BiSeries t2 = mul(mul(w_next, w_next), om.padded(m))
                      .times_monomial(1, 1, level.e1);
    om = add(t1, t2);
    w = std::move(w_next);
  }
  return om;
}

}  // namespace permgf
