#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permgf/bigint.hpp"
#include "permgf/chebgf.hpp"

namespace permgf {

struct TableRow {
  std::int64_t n = 0;
  std::int64_t r = 0;
  Int count;
};

void sort_rows(std::vector<TableRow>& rows);  // by (n, r)

// header n,r,count; one row per line
std::string rows_to_csv(std::vector<TableRow> rows);

// {"k": k, "rows": [{"count": "<decimal>", "n": n, "r": r}, ...]}
// Counts are decimal strings so consumers never need 64-bit integers.
// Keys are emitted in canonical (alphabetical) order; parsing the output and
// re-serializing it reproduces the bytes exactly.
std::string rows_to_json(std::int64_t k, std::vector<TableRow> rows);

// part,degree,coeff rows for numerator and denominator
std::string rational_to_csv(const RationalGF& f);
std::string rational_to_json(const std::string& family, std::int64_t k,
                             std::int64_t r, const RationalGF& f);

}  // namespace permgf
