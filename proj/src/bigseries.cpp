#include "permgf/bigseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permgf {

namespace {

using Acc = std::unordered_map<std::int64_t, Int>;

void check_order(std::int64_t order) {
  if (order < 0) throw std::invalid_argument("BiSeries: order_x must be >= 0");
}

void check_compatible(const BiSeries& a, const BiSeries& b) {
  if (a.order_x() != b.order_x()) {
    throw std::invalid_argument("BiSeries: x-order mismatch (" +
                                std::to_string(a.order_x()) + " vs " +
                                std::to_string(b.order_x()) + ")");
  }
  if (a.y_cap() != b.y_cap()) {
    throw std::invalid_argument("BiSeries: y-cap configuration mismatch");
  }
}

// acc += layer_a * layer_b as polynomials in y, honoring the cap.
void convolve_into(const BiSeries::Layer& a, const BiSeries::Layer& b,
                   const std::optional<std::int64_t>& cap, Acc& acc) {
  for (const auto& [ra, ca] : a) {
    for (const auto& [rb, cb] : b) {
      const std::int64_t r = ra + rb;
      if (cap && r > *cap) break;  // layers are sorted by y-degree
      acc[r] += ca * cb;
    }
  }
}

BiSeries::Layer layer_from_acc(Acc& acc) {
  BiSeries::Layer out;
  out.reserve(acc.size());
  for (auto& [r, c] : acc) {
    if (c != 0) out.emplace_back(r, std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

// merged = a + sign*b for sorted layers
BiSeries::Layer merge_layers(const BiSeries::Layer& a, const BiSeries::Layer& b,
                             int sign) {
  BiSeries::Layer out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      Int c = a[i].second;
      if (sign > 0) {
        c += b[j].second;
      } else {
        c -= b[j].second;
      }
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BiSeries::BiSeries(std::int64_t order_x, std::optional<std::int64_t> y_cap)
    : order_x_(order_x), y_cap_(y_cap), layers_(order_x + 1) {
  check_order(order_x);
  if (y_cap_ && *y_cap_ < 0) {
    throw std::invalid_argument("BiSeries: y-cap must be >= 0");
  }
}

BiSeries BiSeries::one(std::int64_t order_x, std::optional<std::int64_t> y_cap) {
  return monomial(1, 0, 0, order_x, y_cap);
}

BiSeries BiSeries::monomial(const Int& coeff, std::int64_t x_deg,
                            std::int64_t y_deg, std::int64_t order_x,
                            std::optional<std::int64_t> y_cap) {
  if (x_deg < 0 || y_deg < 0) {
    throw std::invalid_argument("BiSeries::monomial: degrees must be >= 0");
  }
  BiSeries s(order_x, y_cap);
  if (coeff != 0 && x_deg <= order_x && !(y_cap && y_deg > *y_cap)) {
    s.layers_[x_deg].emplace_back(y_deg, coeff);
  }
  return s;
}

BiSeries BiSeries::from_layers(std::int64_t order_x,
                               std::optional<std::int64_t> y_cap,
                               std::vector<Layer> layers) {
  BiSeries s(order_x, y_cap);
  layers.resize(order_x + 1);
  for (std::int64_t n = 0; n <= order_x; ++n) {
    Acc acc;
    for (auto& [r, c] : layers[n]) {
      if (r < 0) throw std::invalid_argument("BiSeries: y-degree must be >= 0");
      if (y_cap && r > *y_cap) continue;
      acc[r] += std::move(c);
    }
    s.layers_[n] = layer_from_acc(acc);
  }
  return s;
}

Int BiSeries::coeff(std::int64_t n, std::int64_t r) const {
  if (n < 0 || n > order_x_) return 0;
  const Layer& l = layers_[n];
  auto it = std::lower_bound(
      l.begin(), l.end(), r,
      [](const auto& p, std::int64_t key) { return p.first < key; });
  return (it != l.end() && it->first == r) ? it->second : Int(0);
}

bool BiSeries::is_zero() const {
  for (const Layer& l : layers_) {
    if (!l.empty()) return false;
  }
  return true;
}

std::int64_t BiSeries::term_count() const {
  std::int64_t c = 0;
  for (const Layer& l : layers_) c += static_cast<std::int64_t>(l.size());
  return c;
}

std::vector<Int> BiSeries::y_slice(std::int64_t r) const {
  if (r < 0) throw std::invalid_argument("y_slice: r must be >= 0");
  std::vector<Int> out(order_x_ + 1);
  for (std::int64_t n = 0; n <= order_x_; ++n) out[n] = coeff(n, r);
  return out;
}

std::vector<Int> BiSeries::eval_y_one() const {
  std::vector<Int> out(order_x_ + 1);
  for (std::int64_t n = 0; n <= order_x_; ++n) {
    for (const auto& [r, c] : layers_[n]) out[n] += c;
  }
  return out;
}

BiSeries BiSeries::truncated(std::int64_t m) const {
  if (m < 0 || m > order_x_) {
    throw std::invalid_argument("truncated: need 0 <= m <= order_x");
  }
  BiSeries s(m, y_cap_);
  for (std::int64_t n = 0; n <= m; ++n) s.layers_[n] = layers_[n];
  return s;
}

BiSeries BiSeries::padded(std::int64_t m) const {
  if (m < order_x_) {
    throw std::invalid_argument("padded: need m >= order_x");
  }
  BiSeries s(m, y_cap_);
  for (std::int64_t n = 0; n <= order_x_; ++n) s.layers_[n] = layers_[n];
  return s;
}

BiSeries BiSeries::times_monomial(const Int& coeff, std::int64_t dx,
                                  std::int64_t dy) const {
  if (dx < 0 || dy < 0) {
    throw std::invalid_argument("times_monomial: degrees must be >= 0");
  }
  BiSeries s(order_x_, y_cap_);
  if (coeff == 0) return s;
  for (std::int64_t n = 0; n + dx <= order_x_; ++n) {
    Layer& out = s.layers_[n + dx];
    out.reserve(layers_[n].size());
    for (const auto& [r, c] : layers_[n]) {
      if (y_cap_ && r + dy > *y_cap_) break;
      out.emplace_back(r + dy, c * coeff);
    }
  }
  return s;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.order_x_ == b.order_x_ && a.layers_ == b.layers_;
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  check_compatible(a, b);
  BiSeries s(a.order_x_, a.y_cap_);
  for (std::int64_t n = 0; n <= a.order_x_; ++n) {
    s.layers_[n] = merge_layers(a.layers_[n], b.layers_[n], +1);
  }
  return s;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
  check_compatible(a, b);
  BiSeries s(a.order_x_, a.y_cap_);
  for (std::int64_t n = 0; n <= a.order_x_; ++n) {
    s.layers_[n] = merge_layers(a.layers_[n], b.layers_[n], -1);
  }
  return s;
}

BiSeries negate(const BiSeries& a) {
  BiSeries s(a.order_x_, a.y_cap_);
  for (std::int64_t n = 0; n <= a.order_x_; ++n) {
    s.layers_[n].reserve(a.layers_[n].size());
    for (const auto& [r, c] : a.layers_[n]) s.layers_[n].emplace_back(r, -c);
  }
  return s;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  check_compatible(a, b);
  const std::int64_t N = a.order_x_;
  BiSeries s(N, a.y_cap_);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::int64_t n = 0; n <= N; ++n) {
    Acc acc;
    for (std::int64_t m = 0; m <= n; ++m) {
      if (!a.layers_[m].empty() && !b.layers_[n - m].empty()) {
        convolve_into(a.layers_[m], b.layers_[n - m], a.y_cap_, acc);
      }
    }
    s.layers_[n] = layer_from_acc(acc);
  }
  return s;
}

BiSeries mul_serial(const BiSeries& a, const BiSeries& b) {
  check_compatible(a, b);
  const std::int64_t N = a.order_x_;
  // straightforward term-by-term product into ordered maps
  std::vector<std::map<std::int64_t, Int>> acc(N + 1);
  for (std::int64_t m = 0; m <= N; ++m) {
    for (const auto& [ra, ca] : a.layers_[m]) {
      for (std::int64_t w = 0; m + w <= N; ++w) {
        for (const auto& [rb, cb] : b.layers_[w]) {
          if (a.y_cap_ && ra + rb > *a.y_cap_) continue;
          acc[m + w][ra + rb] += ca * cb;
        }
      }
    }
  }
  BiSeries s(N, a.y_cap_);
  for (std::int64_t n = 0; n <= N; ++n) {
    for (auto& [r, c] : acc[n]) {
      if (c != 0) s.layers_[n].emplace_back(r, std::move(c));
    }
  }
  return s;
}

namespace {

void check_unit(const BiSeries& a) {
  const BiSeries::Layer& l0 = a.layer(0);
  if (l0.size() != 1 || l0[0].first != 0 || l0[0].second != 1) {
    for (const auto& [r, c] : l0) {
      if (r > 0) {
        throw std::invalid_argument(
            "reciprocal_unit: operand has an x-degree-0 term of positive "
            "y-degree; the inverse would not be integral");
      }
    }
    throw std::invalid_argument(
        "reciprocal_unit: operand constant term must be 1");
  }
}

// b = 1/a, solved by back-substitution in increasing x-degree:
//   b_0 = 1,   b_n = -sum_{m=1..n} a_m * b_{n-m}   (a_0 = 1).
// The m-sum for a fixed n has independent summands; the parallel kernel
// splits it across threads and merges the partial accumulators.
BiSeries reciprocal_impl(const BiSeries& a, bool parallel) {
  check_unit(a);
  const std::int64_t N = a.order_x();
  std::vector<BiSeries::Layer> out(N + 1);
  out[0] = {{0, Int(1)}};
  for (std::int64_t n = 1; n <= N; ++n) {
    Acc acc;
    if (!parallel) {
      for (std::int64_t m = 1; m <= n; ++m) {
        convolve_into(a.layer(m), out[n - m], a.y_cap(), acc);
      }
    } else {
#ifdef _OPENMP
#pragma omp parallel
      {
        Acc local;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t m = 1; m <= n; ++m) {
          convolve_into(a.layer(m), out[n - m], a.y_cap(), local);
        }
#pragma omp critical(permgf_recip_merge)
        for (auto& [r, c] : local) acc[r] += std::move(c);
      }
#else
      for (std::int64_t m = 1; m <= n; ++m) {
        convolve_into(a.layer(m), out[n - m], a.y_cap(), acc);
      }
#endif
    }
    for (auto& [r, c] : acc) c = -std::move(c);
    out[n] = layer_from_acc(acc);
  }
  return BiSeries::from_layers(N, a.y_cap(), std::move(out));
}

}  // namespace

BiSeries reciprocal_unit(const BiSeries& a) { return reciprocal_impl(a, true); }

BiSeries reciprocal_unit_serial(const BiSeries& a) {
  return reciprocal_impl(a, false);
}

}  // namespace permgf
