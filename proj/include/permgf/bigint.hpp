#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace permgf {

// One integer type repo-wide: coefficients and counts never overflow.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient C(a, b), with C(a, b) = 0 whenever a < b or b < 0.
Int binomial(std::int64_t a, std::int64_t b);

// Narrows an Int used as an exponent or index. Throws std::domain_error
// (mentioning `what`) if the value does not fit in 64 bits.
std::int64_t to_index(const Int& value, const char* what);

}  // namespace permgf
