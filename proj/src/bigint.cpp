#include "permgf/bigint.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace permgf {

Int binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  Int result = 1;
  // (a-b+i) / i divides exactly at every step.
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::int64_t to_index(const Int& value, const char* what) {
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (value < 0 || value > kMax) {
    throw std::domain_error(std::string(what) + " out of 64-bit index range: " +
                            value.str());
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace permgf
