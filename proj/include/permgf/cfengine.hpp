#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "permgf/bigint.hpp"
#include "permgf/bigseries.hpp"

namespace permgf {

// Exponent data for one level of the occurrence-counting recursions. Under
// the substitution q_1 = x, q_2 = ... = q_{k-1} = 1, q_k = y, the level-d
// monomials collapse to x*y^e1 and y^e2 with
//   e1 = C(d, k-1),   e2 = C(d, k-2),
// where C(a, b) = 0 whenever a < b or b < 0.
struct LevelExponents {
  std::int64_t k = 1;
  std::int64_t d = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  LevelExponents(std::int64_t k, std::int64_t d);

  // (x-exponent, y-exponent) of prod_j q_j^C(d, j-m) after the substitution:
  // the only surviving factors are q_1^C(d, 1-m) and q_k^C(d, k-m).
  static std::pair<std::int64_t, std::int64_t> substituted_exponents(
      std::int64_t d, std::int64_t m, std::int64_t k);
};

// y-exponent of fraction level i (i >= 1) in the occurrence generating
// function: C(i-1, k-1).
std::int64_t level_exponent(std::int64_t i, std::int64_t k);

// Maps a 1-based fraction level to its y-exponent.
using LevelExponentFn = std::function<std::int64_t(std::int64_t)>;

// Evaluates 1/(1 - x*y^e(1)/(1 - x*y^e(2)/(1 - ...))) truncated to the given
// x-order. Exposed so the verification harness can drive the same evaluator
// with a perturbed exponent schedule.
BiSeries cf_eval(std::int64_t order, const LevelExponentFn& exponent,
                 std::optional<std::int64_t> y_cap = std::nullopt);

// F(x, y; k): coefficient of x^n y^r counts the 132-avoiding permutations of
// length n with exactly r increasing subsequences of length k.
BiSeries cf_F(std::int64_t k, std::int64_t order,
              std::optional<std::int64_t> y_cap = std::nullopt);

// G(x, y; k): y times the tail fraction whose level-j numerator is
// x*y^C(k-1+j, j).
BiSeries cf_G(std::int64_t k, std::int64_t order,
              std::optional<std::int64_t> y_cap = std::nullopt);

// Applies T -> 1/(1 - x*T) exactly k times starting from G; equals cf_F.
BiSeries s_ladder(std::int64_t k, std::int64_t order,
                  std::optional<std::int64_t> y_cap = std::nullopt);

// Phi(x, y; k): coefficient of x^n y^r counts the permutations of length n
// with exactly one 132 pattern and exactly r increasing subsequences of
// length k. Established for k >= 3; k = 2 is accepted as an extension.
BiSeries omega_series(std::int64_t k, std::int64_t order,
                      std::optional<std::int64_t> y_cap = std::nullopt);

}  // namespace permgf
