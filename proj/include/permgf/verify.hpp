#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permgf {

// Seeded faults for mutation testing of the harness. Each flag perturbs one
// quantity on the production call path so a healthy run must detect it.
struct VerifyFaults {
  // fraction level i uses C(i, k-1) instead of C(i-1, k-1)
  bool shift_level_exponent = false;
  // the decomposition check forgets the eta_{j-1}(left) summand
  bool drop_recurrence_term = false;
  // the base closed forms use x^(k+r) instead of x^(k+r-1)
  bool shift_closed_form_exponent = false;
};

struct VerifyOptions {
  std::int64_t k = 3;
  std::int64_t n_max = 8;   // brute-force cross-check depth
  std::int64_t order = 20;  // series truncation order
  VerifyFaults faults;
};

struct VerifyCheck {
  std::string name;
  bool ok = false;
  std::int64_t compared = 0;  // coefficient comparisons performed
  std::string detail;         // first mismatch, or a skip note
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_ok() const;
};

// Cross-checks every computation route against the others:
// brute force vs continued fraction, the k-step ladder identity, closed-form
// slices vs series slices (base and extended ranges), the exactly-one-132
// closed form vs its series and brute force, conservation of Catalan totals,
// and the occurrence-count decomposition recurrence.
VerifyReport run_verify(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);   // one line per check
std::string report_to_json(const VerifyReport& report);

}  // namespace permgf
