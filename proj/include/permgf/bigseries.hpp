#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permgf/bigint.hpp"

namespace permgf {

// Truncated bivariate formal power series in x and y over exact integers,
// tracked to x-degree order_x and sparse in the y-degree. An optional y-cap
// drops every term of y-degree above it on every operation; because no
// operation ever lowers a y-degree, the retained y-slices stay exact.
class BiSeries {
 public:
  // One x-layer: (y-degree, coefficient) pairs, sorted by y-degree, no zeros.
  using Layer = std::vector<std::pair<std::int64_t, Int>>;

  // zero series
  explicit BiSeries(std::int64_t order_x,
                    std::optional<std::int64_t> y_cap = std::nullopt);

  static BiSeries one(std::int64_t order_x,
                      std::optional<std::int64_t> y_cap = std::nullopt);
  static BiSeries monomial(const Int& coeff, std::int64_t x_deg,
                           std::int64_t y_deg, std::int64_t order_x,
                           std::optional<std::int64_t> y_cap = std::nullopt);
  // Canonicalizes: sorts, merges duplicates, strips zeros, applies the cap.
  static BiSeries from_layers(std::int64_t order_x,
                              std::optional<std::int64_t> y_cap,
                              std::vector<Layer> layers);

  std::int64_t order_x() const { return order_x_; }
  const std::optional<std::int64_t>& y_cap() const { return y_cap_; }
  const Layer& layer(std::int64_t n) const { return layers_[n]; }
  Int coeff(std::int64_t n, std::int64_t r) const;
  bool is_zero() const;
  std::int64_t term_count() const;

  // Coefficients of x^0..x^order at y-degree r.
  std::vector<Int> y_slice(std::int64_t r) const;
  // Per-x-degree sums of all coefficients (the y = 1 evaluation).
  std::vector<Int> eval_y_one() const;

  BiSeries truncated(std::int64_t m) const;  // m <= order_x
  BiSeries padded(std::int64_t m) const;     // m >= order_x, new layers zero
  // Multiply by coeff * x^dx * y^dy (dx, dy >= 0).
  BiSeries times_monomial(const Int& coeff, std::int64_t dx,
                          std::int64_t dy) const;

  // Same order and identical terms; the y-cap is not part of the value.
  friend bool operator==(const BiSeries& a, const BiSeries& b);

 private:
  std::int64_t order_x_ = 0;
  std::optional<std::int64_t> y_cap_;
  std::vector<Layer> layers_;  // size order_x_ + 1

  friend BiSeries add(const BiSeries&, const BiSeries&);
  friend BiSeries sub(const BiSeries&, const BiSeries&);
  friend BiSeries negate(const BiSeries&);
  friend BiSeries mul(const BiSeries&, const BiSeries&);
  friend BiSeries mul_serial(const BiSeries&, const BiSeries&);
  friend BiSeries reciprocal_unit(const BiSeries&);
  friend BiSeries reciprocal_unit_serial(const BiSeries&);
};

// Operands must agree on order_x and on the y-cap configuration.
BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
BiSeries negate(const BiSeries& a);

// Exact truncated product. `mul` is the OpenMP kernel (independent output
// layers); `mul_serial` is the reference implementation kept for testing.
BiSeries mul(const BiSeries& a, const BiSeries& b);
BiSeries mul_serial(const BiSeries& a, const BiSeries& b);

// Multiplicative inverse of a series with constant term exactly 1 and no
// other x-degree-0 term; solved layer by layer, all coefficients integral.
BiSeries reciprocal_unit(const BiSeries& a);
BiSeries reciprocal_unit_serial(const BiSeries& a);

}  // namespace permgf
