#include "permgf/chebgf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace permgf {

void XPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

XPolynomial::XPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

XPolynomial XPolynomial::monomial(const Int& c, std::int64_t degree) {
  if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
  if (c == 0) return {};
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return XPolynomial(std::move(v));
}

std::int64_t XPolynomial::degree() const {
  return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Int XPolynomial::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[i];
}

XPolynomial XPolynomial::shifted(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("shifted: exponent must be >= 0");
  if (is_zero()) return {};
  std::vector<Int> v(coeffs_.size() + e);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + e] = coeffs_[i];
  return XPolynomial(std::move(v));
}

XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return XPolynomial(std::move(v));
}

XPolynomial operator-(const XPolynomial& a, const XPolynomial& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return XPolynomial(std::move(v));
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return XPolynomial(std::move(v));
}

XPolynomial operator*(const Int& c, const XPolynomial& p) {
  if (c == 0) return {};
  std::vector<Int> v = p.coeffs_;
  for (Int& x : v) x *= c;
  return XPolynomial(std::move(v));
}

bool operator==(const XPolynomial& a, const XPolynomial& b) {
  return a.coeffs_ == b.coeffs_;
}

XPolynomial pow(const XPolynomial& p, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow: exponent must be >= 0");
  XPolynomial result(std::vector<Int>{1});
  for (std::int64_t i = 0; i < e; ++i) result = result * p;
  return result;
}

XPolynomial b_poly(std::int64_t j) {
  if (j < 0) throw std::domain_error("b_poly: index must be >= 0");
  XPolynomial prev(std::vector<Int>{1});  // b_0
  if (j == 0) return prev;
  XPolynomial cur(std::vector<Int>{1});  // b_1
  for (std::int64_t m = 2; m <= j; ++m) {
    XPolynomial next = cur - prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalGF::RationalGF(XPolynomial num_, XPolynomial den_)
    : num(std::move(num_)), den(std::move(den_)) {
  if (den.coeff(0) != 1) {
    throw std::invalid_argument(
        "RationalGF: denominator constant term must be 1");
  }
}

bool same_function(const RationalGF& a, const RationalGF& b) {
  return a.num * b.den == b.num * a.den;
}

std::vector<Int> expand(const RationalGF& f, std::int64_t order) {
  if (order < 0) throw std::invalid_argument("expand: order must be >= 0");
  const std::int64_t dd = f.den.degree();
  std::vector<Int> out(order + 1);
  for (std::int64_t i = 0; i <= order; ++i) {
    Int c = f.num.coeff(i);
    for (std::int64_t j = 1; j <= std::min(i, dd); ++j) {
      c -= f.den.coeff(j) * out[i - j];
    }
    out[i] = std::move(c);
  }
  return out;
}

RationalGF r_rational(std::int64_t j) {
  if (j < 1) throw std::domain_error("r_rational: index must be >= 1");
  return {b_poly(j - 1), b_poly(j)};
}

namespace detail {

RationalGF f_closed_with_shift(std::int64_t r, std::int64_t k,
                               std::int64_t delta) {
  if (k < 1) throw std::domain_error("f_closed: k must be >= 1");
  if (r < 0 || r > k) {
    throw std::domain_error(
        "f_closed: r must be in [0, " + std::to_string(k) +
        "]; use f_closed_extended for k < r <= k(k+3)/2");
  }
  if (r == 0) return {b_poly(k - 1), b_poly(k)};
  return {pow(b_poly(k - 1), r - 1).shifted(k + r - 1 + delta),
          pow(b_poly(k), r + 1)};
}

}  // namespace detail

RationalGF f_closed(std::int64_t r, std::int64_t k) {
  return detail::f_closed_with_shift(r, k, 0);
}

RationalGF f_closed_extended(std::int64_t r, std::int64_t k) {
  if (k < 1) throw std::domain_error("f_closed_extended: k must be >= 1");
  const std::int64_t r_max = k * (k + 3) / 2;
  if (r < 1 || r > r_max) {
    throw std::domain_error("f_closed_extended: r must be in [1, " +
                            std::to_string(r_max) + "] for k = " +
                            std::to_string(k));
  }
  const XPolynomial bk = b_poly(k);
  const XPolynomial bk1 = b_poly(k - 1);
  XPolynomial num;
  for (std::int64_t j = 0; j <= (r - 1) / k; ++j) {
    const std::int64_t x_shift = k + r - 1 - j * (k - 1);
    const std::int64_t low_power = r - 1 - k * j;
    if (x_shift < 0 || low_power < 0) {
      // cannot happen while j <= (r-1)/k; a violation means the exponent
      // bookkeeping above is broken, not a caller error
      throw std::logic_error(
          "f_closed_extended: negative exponent survived combination");
    }
    num = num + binomial(r - k * j + j - 1, j) *
                    (pow(bk1, low_power) * pow(bk, k * j)).shifted(x_shift);
  }
  return {std::move(num), pow(bk, r + 1)};
}

RationalGF phi0_closed(std::int64_t k) {
  if (k < 3) {
    throw std::domain_error("phi0_closed: established for k >= 3, got k = " +
                            std::to_string(k));
  }
  XPolynomial num;
  for (std::int64_t j = 1; j <= k - 2; ++j) {
    const XPolynomial bj = b_poly(j);
    num = num + (bj * bj).shifted(k + 1 - j);
  }
  return {std::move(num), pow(b_poly(k), 2)};
}

XPolynomial cheb_identity_residual(std::int64_t n) {
  if (n < 2) throw std::domain_error("cheb_identity_residual: need n >= 2");
  const XPolynomial b1 = b_poly(n - 1);
  return b1 * b1 - b_poly(n) * b_poly(n - 2) -
         XPolynomial::monomial(1, n - 1);
}

}  // namespace permgf
