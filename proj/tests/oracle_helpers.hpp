// Independent oracles used only by tests: exhaustive scans and generators
// that deliberately avoid the library's optimized code paths.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "permgf/bigint.hpp"
#include "permgf/bigseries.hpp"
#include "permgf/permcore.hpp"

namespace oracle {

using permgf::Int;

// eta_j by scanning every j-element subsequence.
inline Int naive_count_occurrences(const std::vector<int>& v, int j) {
  if (j == 0) return 1;
  const int n = static_cast<int>(v.size());
  if (j > n) return 0;
  Int total = 0;
  std::vector<int> idx(j);
  const std::function<void(int, int)> pick = [&](int pos, int from) {
    if (pos == j) {
      for (int m = 0; m + 1 < j; ++m) {
        if (v[idx[m]] >= v[idx[m + 1]]) return;
      }
      total += 1;
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[pos] = i;
      pick(pos + 1, i + 1);
    }
  };
  pick(0, 0);
  return total;
}

// number of 132 patterns by the O(n^3) triple scan
inline Int naive_count_132(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  Int total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        if (v[i] < v[l] && v[l] < v[j]) total += 1;
      }
    }
  }
  return total;
}

inline void all_permutations(int n,
                             const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  if (n == 0) {
    fn(v);
    return;
  }
  do {
    fn(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

// c_0..c_12, frozen: 1,1,2,5,14,42,132,429,1430,4862,16796,58786,208012
inline std::vector<Int> catalan_frozen() {
  return {1,    1,    2,     5,     14,    42,    132,
          429,  1430, 4862,  16796, 58786, 208012};
}

// Random sparse series for property tests; admissible_unit makes the operand
// legal for reciprocal_unit.
inline permgf::BiSeries random_series(std::mt19937& rng, std::int64_t order,
                                      bool admissible_unit = false) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::int64_t> ydeg(0, 6);
  std::uniform_int_distribution<int> per_layer(0, 3);
  std::vector<permgf::BiSeries::Layer> layers(order + 1);
  for (std::int64_t n = 0; n <= order; ++n) {
    const int terms = per_layer(rng);
    for (int t = 0; t < terms; ++t) {
      layers[n].emplace_back(ydeg(rng), coeff(rng));
    }
  }
  if (admissible_unit) {
    layers[0] = {{0, Int(1)}};
  }
  return permgf::BiSeries::from_layers(order, std::nullopt, std::move(layers));
}

}  // namespace oracle
