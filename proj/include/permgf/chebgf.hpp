#pragma once

#include <cstdint>
#include <vector>

#include "permgf/bigint.hpp"

namespace permgf {

// Dense univariate polynomial in x with exact integer coefficients.
// Canonical form: no trailing zeros; the zero polynomial has no coefficients.
class XPolynomial {
 public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<Int> coeffs);
  static XPolynomial monomial(const Int& c, std::int64_t degree);

  std::int64_t degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(std::int64_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  XPolynomial shifted(std::int64_t e) const;  // multiply by x^e

  friend XPolynomial operator+(const XPolynomial&, const XPolynomial&);
  friend XPolynomial operator-(const XPolynomial&, const XPolynomial&);
  friend XPolynomial operator*(const XPolynomial&, const XPolynomial&);
  friend XPolynomial operator*(const Int&, const XPolynomial&);
  friend bool operator==(const XPolynomial&, const XPolynomial&);

 private:
  std::vector<Int> coeffs_;
  void trim();
};

XPolynomial pow(const XPolynomial& p, std::int64_t e);

// The integer image of the Chebyshev polynomials of the second kind under
// t = 1/(2 sqrt(x)): b_j(x) = x^(j/2) U_j(1/(2 sqrt(x))). Satisfies
// b_0 = b_1 = 1 and b_{j+1} = b_j - x b_{j-1}; degree floor(j/2), b_j(0) = 1.
XPolynomial b_poly(std::int64_t j);

// Ratio of integer polynomials with den(0) = 1, so the power-series
// expansion has integer coefficients. Stored unreduced; equality of the
// represented functions is decided by cross-multiplication.
struct RationalGF {
  XPolynomial num;
  XPolynomial den;

  RationalGF(XPolynomial num, XPolynomial den);
};

bool same_function(const RationalGF& a, const RationalGF& b);

// Coefficients of x^0..x^order of num/den by linear-recurrence
// back-substitution; exact.
std::vector<Int> expand(const RationalGF& f, std::int64_t order);

// j-th approximant of the Catalan continued fraction: b_{j-1} / b_j.
// Satisfies R_j = 1/(1 - x R_{j-1}) with R_0 = 0.
RationalGF r_rational(std::int64_t j);

// Closed form of the r-slice generating function for 0 <= r <= k:
//   r = 0:        b_{k-1} / b_k
//   1 <= r <= k:  x^(k+r-1) b_{k-1}^(r-1) / b_k^(r+1)
// The x-shift k+r-1 is what remains of the half-integer powers once every
// U_j(1/(2 sqrt(x))) is rewritten as b_j(x) x^(-j/2).
RationalGF f_closed(std::int64_t r, std::int64_t k);

// Extended range 1 <= r <= k(k+3)/2:
//   x^(k+r-1) / b_k^(r+1) * sum_{j=0}^{floor((r-1)/k)}
//       C(r-kj+j-1, j) b_{k-1}^(r-1-kj) b_k^(kj) x^(-j(k-1))
// combined over the common denominator b_k^(r+1). The summation bound keeps
// every exponent non-negative; this is asserted at construction.
RationalGF f_closed_extended(std::int64_t r, std::int64_t k);

// Closed form (k >= 3) of the r = 0 slice for exactly-one-132 permutations:
//   (sum_{j=1}^{k-2} b_j^2 x^(k+1-j)) / b_k^2.
RationalGF phi0_closed(std::int64_t k);

// b_{n-1}^2 - b_n b_{n-2} - x^(n-1); the zero polynomial for every n >= 2
// (the b-image of U_{n-1}^2 - U_n U_{n-2} = 1).
XPolynomial cheb_identity_residual(std::int64_t n);

namespace detail {
// f_closed with the x-shift displaced by `delta` for r >= 1; the
// verification harness uses delta = 1 as a seeded fault.
RationalGF f_closed_with_shift(std::int64_t r, std::int64_t k,
                               std::int64_t delta);
}  // namespace detail

}  // namespace permgf
