#include "permgf/permcore.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permgf {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// bits for values 1..v-1
std::uint64_t below(int v) { return (std::uint64_t{1} << (v - 1)) - 1; }

}  // namespace

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  const std::int64_t n = size();
  std::vector<char> seen(vals_.size(), 0);
  for (int v : vals_) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument(
          "Permutation: values must be a bijection onto 1..n");
    }
    seen[v - 1] = 1;
  }
}

Int count_occurrences(const Permutation& pi, std::int64_t j) {
  require(j >= 0, "count_occurrences: pattern length must be >= 0");
  if (j == 0) return 1;
  const std::int64_t n = pi.size();
  if (j > n) return 0;
  // ending[p][m-1] = number of increasing subsequences of length m ending at p
  std::vector<std::vector<Int>> ending(n, std::vector<Int>(j));
  Int total = 0;
  for (std::int64_t p = 0; p < n; ++p) {
    auto& row = ending[p];
    row[0] = 1;
    for (std::int64_t q = 0; q < p; ++q) {
      if (pi[q] < pi[p]) {
        const auto& prev = ending[q];
        for (std::int64_t m = j - 1; m >= 1; --m) row[m] += prev[m - 1];
      }
    }
    total += row[j - 1];
  }
  return total;
}

OccurrenceProfile OccurrenceProfile::of(const Permutation& pi, std::int64_t k) {
  require(k >= 1, "OccurrenceProfile: k must be >= 1");
  const std::int64_t n = pi.size();
  OccurrenceProfile prof;
  prof.k = k;
  prof.counts.assign(k, Int(0));
  std::vector<std::vector<Int>> ending(n, std::vector<Int>(k));
  for (std::int64_t p = 0; p < n; ++p) {
    auto& row = ending[p];
    row[0] = 1;
    for (std::int64_t q = 0; q < p; ++q) {
      if (pi[q] < pi[p]) {
        const auto& prev = ending[q];
        for (std::int64_t m = k - 1; m >= 1; --m) row[m] += prev[m - 1];
      }
    }
    for (std::int64_t m = 0; m < k; ++m) prof.counts[m] += row[m];
  }
  return prof;
}

const Int& OccurrenceProfile::eta(std::int64_t j) const {
  static const Int kOne = 1;
  static const Int kZero = 0;
  if (j == 0) return kOne;
  if (j < 0 || j > k) return kZero;
  return counts[j - 1];
}

bool avoids_132(const Permutation& pi) {
  // pi contains 132 iff some pair j < l has prefix_min(j) < pi_l < pi_j,
  // where prefix_min(j) ranges over positions strictly before j.
  const std::int64_t n = pi.size();
  if (n < 3) return true;
  int prefix_min = pi[0];
  for (std::int64_t j = 1; j + 1 < n; ++j) {
    for (std::int64_t l = j + 1; l < n; ++l) {
      if (prefix_min < pi[l] && pi[l] < pi[j]) return false;
    }
    prefix_min = std::min(prefix_min, pi[j]);
  }
  return true;
}

Int count_132_occurrences(const Permutation& pi) {
  const std::int64_t n = pi.size();
  if (n <= 64) {
    std::uint64_t seen = 0;
    Int total = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      for (std::int64_t l = j + 1; l < n; ++l) {
        if (pi[l] < pi[j]) total += std::popcount(seen & below(pi[l]));
      }
      seen |= std::uint64_t{1} << (pi[j] - 1);
    }
    return total;
  }
  // general path: count the prefix values smaller than pi_l
  std::vector<int> prefix;
  Int total = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t l = j + 1; l < n; ++l) {
      if (pi[l] < pi[j]) {
        total += std::lower_bound(prefix.begin(), prefix.end(), pi[l]) -
                 prefix.begin();
      }
    }
    prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), pi[j]), pi[j]);
  }
  return total;
}

namespace {

// Fills buf[start .. start+len) with a 132-avoiding arrangement of the value
// range [lo, lo+len), calling `done` once per arrangement.
void gen_segment(std::vector<int>& buf, std::int64_t start, int lo,
                 std::int64_t len, const std::function<void()>& done) {
  if (len == 0) {
    done();
    return;
  }
  const int hi = lo + static_cast<int>(len) - 1;
  for (std::int64_t l = 1; l <= len; ++l) {
    buf[start + l - 1] = hi;
    // left block: top l-1 values; right block: bottom len-l values
    gen_segment(buf, start, hi - static_cast<int>(l) + 1, l - 1,
                [&] { gen_segment(buf, start + l, lo, len - l, done); });
  }
}

void check_enumeration_bound(std::int64_t n) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw std::domain_error("132-avoider enumeration supports n <= " +
                            std::to_string(kMaxEnumerationLength) +
                            ", got n = " + std::to_string(n));
  }
}

void check_scan_bound(std::int64_t n) {
  if (n < 0 || n > kMaxFullScanLength) {
    throw std::domain_error(
        "full S_n scan supports n <= " + std::to_string(kMaxFullScanLength) +
        ", got n = " + std::to_string(n));
  }
}

// Occurrence-count DP in machine words; counts are bounded by C(n, j), far
// below 2^64 for every length the enumeration bound allows.
static_assert(kMaxEnumerationLength <= 20);

std::int64_t occurrences_u64(const std::vector<int>& v, std::int64_t n,
                             std::int64_t k,
                             std::vector<std::uint64_t>& scratch) {
  scratch.assign(n * k, 0);
  std::uint64_t total = 0;
  for (std::int64_t p = 0; p < n; ++p) {
    std::uint64_t* row = scratch.data() + p * k;
    row[0] = 1;
    for (std::int64_t q = 0; q < p; ++q) {
      if (v[q] < v[p]) {
        const std::uint64_t* prev = scratch.data() + q * k;
        for (std::int64_t m = k - 1; m >= 1; --m) row[m] += prev[m - 1];
      }
    }
    total += row[k - 1];
  }
  return static_cast<std::int64_t>(total);
}

bool has_exactly_one_132(const std::vector<int>& v, std::int64_t n) {
  std::uint64_t seen = 0;
  int total = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t l = j + 1; l < n; ++l) {
      if (v[l] < v[j]) {
        total += std::popcount(seen & below(v[l]));
        if (total > 1) return false;
      }
    }
    seen |= std::uint64_t{1} << (v[j] - 1);
  }
  return total == 1;
}

void merge_counts(CountTable& into,
                  const std::map<std::int64_t, std::uint64_t>& part) {
  for (const auto& [r, c] : part) into[r] += c;
}

}  // namespace

void enumerate_132_avoiding(
    std::int64_t n, const std::function<void(const Permutation&)>& emit) {
  check_enumeration_bound(n);
  std::vector<int> buf(n);
  gen_segment(buf, 0, 1, n, [&] { emit(Permutation(buf)); });
}

CountTable brute_table_serial(std::int64_t n, std::int64_t k) {
  require(k >= 1, "brute_table: k must be >= 1");
  check_enumeration_bound(n);
  CountTable table;
  enumerate_132_avoiding(n, [&](const Permutation& pi) {
    table[to_index(count_occurrences(pi, k), "occurrence count")] += 1;
  });
  return table;
}

CountTable brute_table(std::int64_t n, std::int64_t k) {
  require(k >= 1, "brute_table: k must be >= 1");
  check_enumeration_bound(n);
  if (n == 0) return {{0, 1}};

  // Independent subtrees: position l of the value n, then position l2 of n-1
  // inside the left block. ~n^2/2 tasks of comparable size.
  std::vector<std::pair<int, int>> tasks;
  for (int l = 1; l <= n; ++l) {
    if (l == 1) {
      tasks.emplace_back(1, 0);
    } else {
      for (int l2 = 1; l2 <= l - 1; ++l2) tasks.emplace_back(l, l2);
    }
  }
  const std::int64_t task_count = static_cast<std::int64_t>(tasks.size());

  CountTable table;
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::map<std::int64_t, std::uint64_t> local;
    std::vector<int> buf(n);
    std::vector<std::uint64_t> scratch;
    const std::function<void()> count_one = [&] {
      ++local[occurrences_u64(buf, n, k, scratch)];
    };
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (std::int64_t t = 0; t < task_count; ++t) {
      const auto [l, l2] = tasks[t];
      buf[l - 1] = static_cast<int>(n);
      const std::function<void()> fill_right = [&, l] {
        gen_segment(buf, l, 1, n - l, count_one);
      };
      if (l == 1) {
        fill_right();
      } else {
        // left block occupies [0, l-2] with values [n-l+1, n-1]
        buf[l2 - 1] = static_cast<int>(n - 1);
        gen_segment(buf, 0, static_cast<int>(n - l2), l2 - 1, [&, l, l2] {
          gen_segment(buf, l2, static_cast<int>(n - l + 1), l - 1 - l2,
                      fill_right);
        });
      }
    }
#ifdef _OPENMP
#pragma omp critical(permgf_brute_table_merge)
#endif
    merge_counts(table, local);
  }
  return table;
}

CountTable brute_one132_table_serial(std::int64_t n, std::int64_t k) {
  require(k >= 1, "brute_one132_table: k must be >= 1");
  check_scan_bound(n);
  CountTable table;
  if (n == 0) return table;
  std::vector<int> v(n);
  for (std::int64_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  do {
    Permutation pi(v);
    if (count_132_occurrences(pi) == 1) {
      table[to_index(count_occurrences(pi, k), "occurrence count")] += 1;
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return table;
}

CountTable brute_one132_table(std::int64_t n, std::int64_t k) {
  require(k >= 1, "brute_one132_table: k must be >= 1");
  check_scan_bound(n);
  CountTable table;
  if (n < 3) return table;  // too short to contain 132

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::map<std::int64_t, std::uint64_t> local;
    std::vector<int> perm(n);
    std::vector<int> rest(n - 1);
    std::vector<std::uint64_t> scratch;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1) nowait
#endif
    for (std::int64_t first = 1; first <= n; ++first) {
      perm[0] = static_cast<int>(first);
      std::int64_t w = 0;
      for (std::int64_t v = 1; v <= n; ++v) {
        if (v != first) rest[w++] = static_cast<int>(v);
      }
      do {
        std::copy(rest.begin(), rest.end(), perm.begin() + 1);
        if (has_exactly_one_132(perm, n)) {
          ++local[occurrences_u64(perm, n, k, scratch)];
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
#ifdef _OPENMP
#pragma omp critical(permgf_one132_merge)
#endif
    merge_counts(table, local);
  }
  return table;
}

std::vector<Int> catalan_numbers(std::int64_t count) {
  require(count >= 0, "catalan_numbers: count must be >= 0");
  std::vector<Int> c(count + 1);
  c[0] = 1;
  for (std::int64_t m = 1; m <= count; ++m) {
    Int sum = 0;
    for (std::int64_t i = 0; i < m; ++i) sum += c[i] * c[m - 1 - i];
    c[m] = sum;
  }
  return c;
}

}  // namespace permgf
