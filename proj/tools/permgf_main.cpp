// permgf: tables, series, and closed forms for 132-avoiding permutations
// counted by their number of increasing subsequences of a fixed length, plus
// the analogous counts for permutations with exactly one 132 pattern, with a
// verification harness that cross-checks every computation route.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permgf/bigseries.hpp"
#include "permgf/cfengine.hpp"
#include "permgf/chebgf.hpp"
#include "permgf/permcore.hpp"
#include "permgf/tableio.hpp"
#include "permgf/verify.hpp"

namespace {

using namespace permgf;

enum class Mode { brute, cf, closed };
enum class Format { csv, json };

const std::map<std::string, Mode> kModeNames{
    {"brute", Mode::brute}, {"cf", Mode::cf}, {"closed", Mode::closed}};
const std::map<std::string, Format> kFormatNames{{"csv", Format::csv},
                                                 {"json", Format::json}};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::vector<TableRow> rows_from_series(const BiSeries& series,
                                       std::optional<std::int64_t> r_filter) {
  std::vector<TableRow> rows;
  for (std::int64_t n = 0; n <= series.order_x(); ++n) {
    for (const auto& [r, c] : series.layer(n)) {
      if (r_filter && r != *r_filter) continue;
      rows.push_back({n, r, c});
    }
  }
  return rows;
}

// F_r by whichever closed form covers r; throws with both valid ranges.
RationalGF closed_slice(std::int64_t r, std::int64_t k) {
  if (r >= 0 && r <= k) return f_closed(r, k);
  if (r >= 1 && r <= k * (k + 3) / 2) return f_closed_extended(r, k);
  throw std::domain_error(
      "closed forms cover 0 <= r <= k (base) and 1 <= r <= k(k+3)/2 = " +
      std::to_string(k * (k + 3) / 2) + " (extended); got r = " +
      std::to_string(r));
}

std::string format_rows(Format format, std::int64_t k,
                        std::vector<TableRow> rows) {
  return format == Format::csv ? rows_to_csv(std::move(rows))
                               : rows_to_json(k, std::move(rows));
}

int run_table(std::int64_t k, std::int64_t n, Mode mode,
              std::optional<std::int64_t> r_filter,
              std::optional<std::int64_t> y_cap, Format format,
              const std::string& out_path) {
  std::vector<TableRow> rows;
  switch (mode) {
    case Mode::brute:
      if (n > kMaxEnumerationLength) brute_table(n, k);  // reports the bound
      for (std::int64_t m = 0; m <= n; ++m) {
        for (const auto& [r, c] : brute_table(m, k)) {
          if (r_filter && r != *r_filter) continue;
          rows.push_back({m, r, c});
        }
      }
      break;
    case Mode::cf:
      rows = rows_from_series(cf_F(k, n, y_cap), r_filter);
      break;
    case Mode::closed: {
      std::int64_t r_lo = 0, r_hi = k * (k + 3) / 2;
      if (r_filter) {
        closed_slice(*r_filter, k);  // range check up front
        r_lo = r_hi = *r_filter;
      }
      for (std::int64_t r = r_lo; r <= r_hi; ++r) {
        const std::vector<Int> seq = expand(closed_slice(r, k), n);
        for (std::int64_t m = 0; m <= n; ++m) {
          if (seq[m] != 0) rows.push_back({m, r, seq[m]});
        }
      }
      break;
    }
  }
  emit(format_rows(format, k, std::move(rows)), out_path);
  return 0;
}

int run_series(std::int64_t k, std::int64_t r, std::int64_t order, Mode mode,
               std::optional<std::int64_t> y_cap, Format format,
               const std::string& out_path) {
  std::vector<Int> seq;
  switch (mode) {
    case Mode::brute: {
      if (order > kMaxEnumerationLength) brute_table(order, k);
      seq.resize(order + 1);
      for (std::int64_t m = 0; m <= order; ++m) {
        const CountTable t = brute_table(m, k);
        const auto it = t.find(r);
        seq[m] = it == t.end() ? Int(0) : it->second;
      }
      break;
    }
    case Mode::cf:
      seq = cf_F(k, order, y_cap).y_slice(r);
      break;
    case Mode::closed:
      seq = expand(closed_slice(r, k), order);
      break;
  }
  std::vector<TableRow> rows;
  for (std::int64_t m = 0; m <= order; ++m) rows.push_back({m, r, seq[m]});
  emit(format_rows(format, k, std::move(rows)), out_path);
  return 0;
}

int run_phi(std::int64_t k, std::int64_t n, Mode mode,
            std::optional<std::int64_t> r_filter,
            std::optional<std::int64_t> y_cap, bool closed_form,
            Format format, const std::string& out_path) {
  if (closed_form) {
    const RationalGF f = phi0_closed(k);
    emit(format == Format::csv ? rational_to_csv(f)
                               : rational_to_json("one132", k, 0, f),
         out_path);
    return 0;
  }
  std::vector<TableRow> rows;
  switch (mode) {
    case Mode::brute:
      if (n > kMaxFullScanLength) brute_one132_table(n, k);
      for (std::int64_t m = 0; m <= n; ++m) {
        for (const auto& [r, c] : brute_one132_table(m, k)) {
          if (r_filter && r != *r_filter) continue;
          rows.push_back({m, r, c});
        }
      }
      break;
    case Mode::cf:
      rows = rows_from_series(omega_series(k, n, y_cap), r_filter);
      break;
    case Mode::closed: {
      if (r_filter && *r_filter != 0) {
        throw std::domain_error(
            "the one-132 closed form covers only the r = 0 slice");
      }
      const std::vector<Int> seq = expand(phi0_closed(k), n);
      for (std::int64_t m = 0; m <= n; ++m) {
        if (seq[m] != 0) rows.push_back({m, 0, seq[m]});
      }
      break;
    }
  }
  emit(format_rows(format, k, std::move(rows)), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact counts of 132-avoiding permutations by the number of increasing "
      "subsequences of length k, computed by brute force, by truncated "
      "continued fractions, and by closed forms, with cross-verification"};
  app.require_subcommand(1);

  std::int64_t k = 0, n = 0, order = 20, n_max = 8;
  std::int64_t r = 0;
  std::optional<std::int64_t> r_filter, y_cap;
  Mode mode = Mode::cf;
  Format format = Format::csv;
  std::string out_path;
  bool phi_closed_form = false;
  std::vector<std::string> fault_names;

  const auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--k", k, "pattern length k (>= 1)")->required();
    if (with_mode) {
      cmd->add_option("--mode", mode, "computation route")
          ->transform(CLI::CheckedTransformer(kModeNames))
          ->capture_default_str();
    }
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write output to this file");
  };

  CLI::App* table = app.add_subcommand(
      "table", "rows (n, r, count) for all lengths n = 0..N");
  add_common(table, true);
  table->add_option("--n", n, "maximum permutation length")->required();
  table->add_option("--r", r_filter, "restrict to one occurrence count");
  table->add_option("--y-cap", y_cap,
                    "drop occurrence counts above this bound (cf mode; "
                    "retained slices stay exact)");

  CLI::App* series = app.add_subcommand(
      "series", "the sequence n -> count for one fixed r, n = 0..order");
  add_common(series, true);
  series->add_option("--r", r, "occurrence count r")->required();
  series->add_option("--order", order, "truncation order")->required();
  series->add_option("--y-cap", y_cap, "y-degree cap (cf mode)");

  CLI::App* closed = app.add_subcommand(
      "closed", "numerator/denominator of the closed-form slice F_r");
  add_common(closed, false);
  closed->add_option("--r", r, "occurrence count r")->required();

  CLI::App* phi = app.add_subcommand(
      "phi", "counts over permutations with exactly one 132 pattern");
  add_common(phi, true);
  CLI::Option* phi_n = phi->add_option(
      "--n", n, "maximum permutation length / truncation order");
  phi->add_option("--r", r_filter, "restrict to one occurrence count");
  phi->add_option("--y-cap", y_cap, "y-degree cap (cf mode)");
  phi->add_flag("--closed-form", phi_closed_form,
                "print the rational closed form of the r = 0 slice instead");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check all computation routes; exit 1 on any mismatch");
  verify->add_option("--k", k, "pattern length k (>= 1)")->required();
  verify->add_option("--n-max", n_max, "brute-force depth")
      ->capture_default_str();
  verify->add_option("--order", order, "series truncation order")
      ->capture_default_str();
  verify->add_option("--format", format, "report format")
      ->transform(CLI::CheckedTransformer(kFormatNames))
      ->capture_default_str();
  verify->add_option("--out", out_path, "write report to this file");
  verify
      ->add_option("--inject-fault", fault_names,
                   "test instrumentation: seed a known bug "
                   "(level-exponent | recurrence-term | closed-form-exponent)")
      ->check(CLI::IsMember(
          {"level-exponent", "recurrence-term", "closed-form-exponent"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) {
      return run_table(k, n, mode, r_filter, y_cap, format, out_path);
    }
    if (series->parsed()) {
      return run_series(k, r, order, mode, y_cap, format, out_path);
    }
    if (closed->parsed()) {
      const RationalGF f = closed_slice(r, k);
      emit(format == Format::csv
               ? rational_to_csv(f)
               : rational_to_json("occurrences", k, r, f),
           out_path);
      return 0;
    }
    if (phi->parsed()) {
      if (!phi_closed_form && phi_n->count() == 0) {
        std::cerr << "error: phi requires --n unless --closed-form is given\n";
        return 2;
      }
      return run_phi(k, n, mode, r_filter, y_cap, phi_closed_form, format,
                     out_path);
    }
    if (verify->parsed()) {
      VerifyOptions options;
      options.k = k;
      options.n_max = n_max;
      options.order = order;
      for (const std::string& name : fault_names) {
        if (name == "level-exponent") {
          options.faults.shift_level_exponent = true;
        } else if (name == "recurrence-term") {
          options.faults.drop_recurrence_term = true;
        } else if (name == "closed-form-exponent") {
          options.faults.shift_closed_form_exponent = true;
        }
      }
      const VerifyReport report = run_verify(options);
      emit(format == Format::csv ? format_report(report)
                                 : report_to_json(report),
           out_path);
      return report.all_ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
