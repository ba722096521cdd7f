#include "permgf/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "permgf/bigseries.hpp"
#include "permgf/cfengine.hpp"
#include "permgf/chebgf.hpp"
#include "permgf/permcore.hpp"

namespace permgf {

namespace {

std::vector<std::int64_t> attained_y_degrees(const BiSeries::Layer& a,
                                             const BiSeries::Layer& b) {
  std::vector<std::int64_t> keys;
  for (const auto& [r, c] : a) keys.push_back(r);
  for (const auto& [r, c] : b) keys.push_back(r);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

void record_mismatch(VerifyCheck& check, std::int64_t n, std::int64_t r,
                     const char* lhs_label, const Int& lhs,
                     const char* rhs_label, const Int& rhs) {
  std::ostringstream os;
  os << "n=" << n;
  if (r >= 0) os << " r=" << r;
  os << ": " << lhs_label << "=" << lhs << " " << rhs_label << "=" << rhs;
  check.ok = false;
  check.detail = os.str();
}

// One x-layer of a series against a brute-force table.
void check_layer(VerifyCheck& check, std::int64_t n, const CountTable& table,
                 const BiSeries& series, const char* lhs_label,
                 const char* rhs_label) {
  if (!check.ok) return;
  BiSeries::Layer table_layer;
  for (const auto& [r, c] : table) table_layer.emplace_back(r, c);
  for (std::int64_t r : attained_y_degrees(table_layer, series.layer(n))) {
    ++check.compared;
    auto it = table.find(r);
    const Int want = it == table.end() ? Int(0) : it->second;
    const Int got = series.coeff(n, r);
    if (want != got) {
      record_mismatch(check, n, r, lhs_label, want, rhs_label, got);
      return;
    }
  }
}

void check_sequences(VerifyCheck& check, const std::vector<Int>& want,
                     const std::vector<Int>& got, const char* lhs_label,
                     const char* rhs_label) {
  if (!check.ok) return;
  const std::size_t len = std::min(want.size(), got.size());
  for (std::size_t n = 0; n < len; ++n) {
    ++check.compared;
    if (want[n] != got[n]) {
      record_mismatch(check, static_cast<std::int64_t>(n), -1, lhs_label,
                      want[n], rhs_label, got[n]);
      return;
    }
  }
}

void check_series_equal(VerifyCheck& check, const BiSeries& a,
                        const BiSeries& b, const char* lhs_label,
                        const char* rhs_label) {
  if (!check.ok) return;
  for (std::int64_t n = 0; n <= a.order_x(); ++n) {
    for (std::int64_t r : attained_y_degrees(a.layer(n), b.layer(n))) {
      ++check.compared;
      if (a.coeff(n, r) != b.coeff(n, r)) {
        record_mismatch(check, n, r, lhs_label, a.coeff(n, r), rhs_label,
                        b.coeff(n, r));
        return;
      }
    }
  }
}

VerifyCheck skipped(const std::string& name, const std::string& why) {
  return {name, true, 0, "skipped: " + why};
}

}  // namespace

bool VerifyReport::all_ok() const {
  for (const VerifyCheck& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const std::int64_t k = options.k;
  if (k < 1) throw std::domain_error("run_verify: k must be >= 1");
  if (options.n_max < 0 || options.order < 0) {
    throw std::domain_error("run_verify: n_max and order must be >= 0");
  }
  const std::int64_t n_brute = std::min(options.n_max, kMaxEnumerationLength);
  const std::int64_t n_scan = std::min(options.n_max, kMaxFullScanLength);
  const std::int64_t order = options.order;
  const VerifyFaults& faults = options.faults;

  // Fault (a) shifts the level schedule of the fraction evaluator; every
  // downstream consumer of the series sees the perturbed coefficients.
  const LevelExponentFn levels = [k, &faults](std::int64_t i) {
    return level_exponent(i + (faults.shift_level_exponent ? 1 : 0), k);
  };
  const std::int64_t closed_delta = faults.shift_closed_form_exponent ? 1 : 0;

  VerifyReport report;

  const BiSeries f_small = cf_eval(n_brute, levels);
  {
    VerifyCheck check{"brute force vs continued fraction", true, 0, ""};
    for (std::int64_t n = 0; n <= n_brute; ++n) {
      check_layer(check, n, brute_table(n, k), f_small, "brute", "cf");
    }
    report.checks.push_back(check);
  }

  const BiSeries f_deep = cf_eval(order, levels);
  {
    VerifyCheck check{"ladder identity (k reciprocal steps from G)", true, 0,
                      ""};
    check_series_equal(check, f_deep, s_ladder(k, order), "cf", "ladder");
    report.checks.push_back(check);
  }

  {
    VerifyCheck check{"closed forms, base range (0 <= r <= k)", true, 0, ""};
    for (std::int64_t r = 0; r <= k; ++r) {
      check_sequences(
          check,
          expand(detail::f_closed_with_shift(r, k, closed_delta), order),
          f_deep.y_slice(r), "closed", "cf");
    }
    report.checks.push_back(check);
  }

  {
    VerifyCheck check{"closed forms, extended range (1 <= r <= k(k+3)/2)",
                      true, 0, ""};
    for (std::int64_t r = 1; r <= k * (k + 3) / 2; ++r) {
      check_sequences(check, expand(f_closed_extended(r, k), order),
                      f_deep.y_slice(r), "closed", "cf");
    }
    report.checks.push_back(check);
  }

  {
    VerifyCheck check{"Catalan conservation (y = 1)", true, 0, ""};
    check_sequences(check, catalan_numbers(order), f_deep.eval_y_one(),
                    "catalan", "cf");
    report.checks.push_back(check);
  }

  {
    // Occurrence counts of pi = (left, max, right) must satisfy
    //   eta_j(pi) = eta_j(left) + eta_j(right) + eta_{j-1}(left).
    // Fault (b) drops the last summand.
    VerifyCheck check{"decomposition recurrence", true, 0, ""};
    const std::int64_t n_rec = std::min<std::int64_t>(n_brute, 9);
    for (std::int64_t n = 1; n <= n_rec && check.ok; ++n) {
      enumerate_132_avoiding(n, [&](const Permutation& pi) {
        if (!check.ok) return;
        const auto& vals = pi.values();
        const std::int64_t split =
            std::find(vals.begin(), vals.end(), static_cast<int>(n)) -
            vals.begin();
        // the left block holds the top values; renumber both blocks to 1..len
        std::vector<int> left_vals(vals.begin(), vals.begin() + split);
        for (int& v : left_vals) v -= static_cast<int>(n - split - 1);
        std::vector<int> right_vals(vals.begin() + split + 1, vals.end());
        const OccurrenceProfile whole = OccurrenceProfile::of(pi, k);
        const OccurrenceProfile left =
            OccurrenceProfile::of(Permutation(left_vals), k);
        const OccurrenceProfile right =
            OccurrenceProfile::of(Permutation(right_vals), k);
        for (std::int64_t j = 1; j <= k; ++j) {
          ++check.compared;
          Int predicted = left.eta(j) + right.eta(j);
          if (!faults.drop_recurrence_term) predicted += left.eta(j - 1);
          if (whole.eta(j) != predicted) {
            std::ostringstream os;
            os << "n=" << n << " j=" << j << ": direct=" << whole.eta(j)
               << " recurrence=" << predicted;
            check.ok = false;
            check.detail = os.str();
            return;
          }
        }
      });
    }
    report.checks.push_back(check);
  }

  if (k >= 3) {
    const BiSeries om = omega_series(k, order);
    {
      VerifyCheck check{"one-132 closed form vs series (r = 0)", true, 0, ""};
      check_sequences(check, expand(phi0_closed(k), order), om.y_slice(0),
                      "closed", "series");
      report.checks.push_back(check);
    }
    {
      VerifyCheck check{"one-132 brute force vs series", true, 0, ""};
      for (std::int64_t n = 0; n <= std::min(n_scan, order); ++n) {
        check_layer(check, n, brute_one132_table(n, k), om, "brute", "series");
      }
      report.checks.push_back(check);
    }
  } else {
    report.checks.push_back(
        skipped("one-132 closed form vs series (r = 0)", "needs k >= 3"));
    report.checks.push_back(
        skipped("one-132 brute force vs series", "needs k >= 3"));
  }

  return report;
}

std::string format_report(const VerifyReport& report) {
  std::string out;
  for (const VerifyCheck& c : report.checks) {
    out += c.ok ? "ok   " : "FAIL ";
    out += c.name;
    out += " (" + std::to_string(c.compared) + " values compared)";
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  out += report.all_ok() ? "all checks passed\n" : "verification FAILED\n";
  return out;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::json doc;
  doc["ok"] = report.all_ok();
  nlohmann::json arr = nlohmann::json::array();
  for (const VerifyCheck& c : report.checks) {
    arr.push_back({{"name", c.name},
                   {"ok", c.ok},
                   {"compared", c.compared},
                   {"detail", c.detail}});
  }
  doc["checks"] = std::move(arr);
  return doc.dump() + "\n";
}

}  // namespace permgf
