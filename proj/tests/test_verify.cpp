#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "permgf/cfengine.hpp"
#include "permgf/permcore.hpp"
#include "permgf/tableio.hpp"
#include "permgf/verify.hpp"

using namespace permgf;

namespace {
VerifyOptions small_options() {
  VerifyOptions options;
  options.k = 3;
  options.n_max = 6;
  options.order = 10;
  return options;
}
}  // namespace

TEST_CASE("clean verification passes") {
  const VerifyReport report = run_verify(small_options());
  CHECK(report.all_ok());
  CHECK(report.checks.size() == 8);
  for (const auto& c : report.checks) {
    CHECK(c.ok);
    CHECK(c.compared > 0);
  }
  const std::string text = format_report(report);
  CHECK(text.find("all checks passed") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("degenerate k = 1 verification passes") {
  VerifyOptions options = small_options();
  options.k = 1;
  const VerifyReport report = run_verify(options);
  CHECK(report.all_ok());
}

TEST_CASE("k = 2 verification passes with the one-132 checks skipped") {
  VerifyOptions options = small_options();
  options.k = 2;
  const VerifyReport report = run_verify(options);
  CHECK(report.all_ok());
  int skipped = 0;
  for (const auto& c : report.checks) {
    if (c.detail.find("skipped") != std::string::npos) ++skipped;
  }
  CHECK(skipped == 2);
}

TEST_CASE("seeded level-exponent fault is detected") {
  VerifyOptions options = small_options();
  options.faults.shift_level_exponent = true;
  const VerifyReport report = run_verify(options);
  CHECK_FALSE(report.all_ok());
  bool brute_vs_cf_failed = false;
  for (const auto& c : report.checks) {
    if (c.name == "brute force vs continued fraction" && !c.ok) {
      brute_vs_cf_failed = true;
      CHECK(c.detail.find("brute=") != std::string::npos);
      CHECK(c.detail.find("cf=") != std::string::npos);
    }
  }
  CHECK(brute_vs_cf_failed);
}

TEST_CASE("seeded recurrence-term fault is detected") {
  VerifyOptions options = small_options();
  options.faults.drop_recurrence_term = true;
  const VerifyReport report = run_verify(options);
  CHECK_FALSE(report.all_ok());
  for (const auto& c : report.checks) {
    if (c.name == "decomposition recurrence") CHECK_FALSE(c.ok);
  }
}

TEST_CASE("seeded closed-form-exponent fault is detected") {
  VerifyOptions options = small_options();
  options.faults.shift_closed_form_exponent = true;
  const VerifyReport report = run_verify(options);
  CHECK_FALSE(report.all_ok());
  for (const auto& c : report.checks) {
    if (c.name == "closed forms, base range (0 <= r <= k)") CHECK_FALSE(c.ok);
  }
}

TEST_CASE("csv output schema") {
  std::vector<TableRow> rows;
  for (const auto& [r, c] : brute_table(3, 3)) rows.push_back({3, r, c});
  CHECK(rows_to_csv(rows) == "n,r,count\n3,0,4\n3,1,1\n");
}

TEST_CASE("rows are sorted by (n, r) regardless of input order") {
  std::vector<TableRow> rows{{2, 1, Int(7)}, {0, 0, Int(1)}, {2, 0, Int(3)}};
  CHECK(rows_to_csv(rows) == "n,r,count\n0,0,1\n2,0,3\n2,1,7\n");
}

TEST_CASE("json output round-trips byte-identically") {
  std::vector<TableRow> rows;
  for (std::int64_t n = 0; n <= 6; ++n) {
    for (const auto& [r, c] : brute_table(n, 3)) rows.push_back({n, r, c});
  }
  const std::string emitted = rows_to_json(3, rows);
  const auto parsed = nlohmann::json::parse(emitted);
  CHECK(parsed.dump() + "\n" == emitted);
  // counts are decimal strings, indices plain integers
  CHECK(parsed["k"] == 3);
  CHECK(parsed["rows"][0]["count"].is_string());
  CHECK(parsed["rows"][0]["n"].is_number_integer());

  const std::string report_json = report_to_json(run_verify(small_options()));
  const auto parsed_report = nlohmann::json::parse(report_json);
  CHECK(parsed_report.dump() + "\n" == report_json);
  CHECK(parsed_report["ok"] == true);
}

TEST_CASE("table content is independent of the y-cap for retained slices") {
  const BiSeries full = cf_F(3, 10);
  const BiSeries capped = cf_F(3, 10, 3);
  std::vector<TableRow> full_rows, capped_rows;
  for (std::int64_t n = 0; n <= 10; ++n) {
    for (const auto& [r, c] : full.layer(n)) {
      if (r <= 3) full_rows.push_back({n, r, c});
    }
    for (const auto& [r, c] : capped.layer(n)) capped_rows.push_back({n, r, c});
  }
  CHECK(rows_to_csv(full_rows) == rows_to_csv(capped_rows));
}

TEST_CASE("rational output formats") {
  const RationalGF f = f_closed(1, 3);
  CHECK(rational_to_csv(f) ==
        "part,degree,coeff\nnum,0,0\nnum,1,0\nnum,2,0\nnum,3,1\n"
        "den,0,1\nden,1,-4\nden,2,4\n");
  const std::string json = rational_to_json("occurrences", 3, 1, f);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["num"] == nlohmann::json({"0", "0", "0", "1"}));
  CHECK(parsed["den"] == nlohmann::json({"1", "-4", "4"}));
  CHECK(parsed.dump() + "\n" == json);
}
