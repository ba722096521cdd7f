#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "permgf/bigint.hpp"

namespace permgf {

// A permutation of {1..n}, stored one-line. n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  // Validates that `values` is a bijection onto {1..n}; throws
  // std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> values);

  std::int64_t size() const { return static_cast<std::int64_t>(vals_.size()); }
  int operator[](std::int64_t i) const { return vals_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return vals_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> vals_;
};

// eta_j: the number of strictly increasing subsequences of length j.
// eta_0 is 1 by convention (the empty pattern occurs once).
Int count_occurrences(const Permutation& pi, std::int64_t j);

// The vector (eta_1, ..., eta_k) for one permutation, computed in a single
// dynamic-programming sweep.
struct OccurrenceProfile {
  std::int64_t k = 0;
  std::vector<Int> counts;  // counts[j-1] == eta_j

  static OccurrenceProfile of(const Permutation& pi, std::int64_t k);
  const Int& eta(std::int64_t j) const;  // eta(0) == 1
};

// True iff no index triple i < j < l has pi_i < pi_l < pi_j.
bool avoids_132(const Permutation& pi);

// Number of index triples i < j < l with pi_i < pi_l < pi_j.
Int count_132_occurrences(const Permutation& pi);

// Enumeration works through the decomposition (left, max, right): the left
// block carries the top values, the right block the bottom values, both
// recursively 132-avoiding. Position of the maximum runs 1..n, left block
// enumerated before right, so the order is deterministic.
inline constexpr std::int64_t kMaxEnumerationLength = 14;
void enumerate_132_avoiding(std::int64_t n,
                            const std::function<void(const Permutation&)>& emit);

// r -> number of permutations. Keys are exactly the r with a positive count.
using CountTable = std::map<std::int64_t, Int>;

// Number of 132-avoiding permutations of length n with exactly r increasing
// subsequences of length k, for every attained r. OpenMP-parallel kernel;
// the _serial variant is the straightforward reference kept for testing.
CountTable brute_table(std::int64_t n, std::int64_t k);
CountTable brute_table_serial(std::int64_t n, std::int64_t k);

// Same, over permutations that contain exactly one 132 pattern. Scans all n!
// permutations, so the bound is tighter.
inline constexpr std::int64_t kMaxFullScanLength = 10;
CountTable brute_one132_table(std::int64_t n, std::int64_t k);
CountTable brute_one132_table_serial(std::int64_t n, std::int64_t k);

// c_0..c_count by the standard convolution recurrence.
std::vector<Int> catalan_numbers(std::int64_t count);

}  // namespace permgf
