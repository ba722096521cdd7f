// Compares the OpenMP kernels against their serial reference
// implementations: same inputs, timed wall clock, results checked equal.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "permgf/bigseries.hpp"
#include "permgf/cfengine.hpp"
#include "permgf/permcore.hpp"

namespace {

using namespace permgf;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 0;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = (i == 0) ? ms : std::min(best, ms);
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool equal) {
  std::cout << std::left << std::setw(38) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << " ms"
            << std::setw(10) << parallel_ms << " ms" << std::setw(9)
            << std::setprecision(2) << serial_ms / parallel_ms << "x"
            << (equal ? "   results equal" : "   RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial reference vs OpenMP kernels"};
  std::int64_t table_n = 11, scan_n = 8, series_k = 5, series_order = 16;
  int reps = 1;
  app.add_option("--table-n", table_n, "length for the 132-avoider table");
  app.add_option("--scan-n", scan_n, "length for the full S_n scan");
  app.add_option("--series-k", series_k, "pattern length for series operands");
  app.add_option("--series-order", series_order, "series truncation order");
  app.add_option("--reps", reps, "repetitions (best time wins)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n\n";
#endif
  std::cout << std::left << std::setw(38) << "kernel" << std::right
            << std::setw(13) << "serial" << std::setw(13) << "parallel"
            << std::setw(10) << "speedup" << "\n";

  {
    CountTable serial, parallel;
    const double ts =
        time_ms([&] { serial = brute_table_serial(table_n, 3); }, reps);
    const double tp = time_ms([&] { parallel = brute_table(table_n, 3); }, reps);
    report("brute_table(n=" + std::to_string(table_n) + ", k=3)", ts, tp,
           serial == parallel);
  }

  {
    CountTable serial, parallel;
    const double ts =
        time_ms([&] { serial = brute_one132_table_serial(scan_n, 3); }, reps);
    const double tp =
        time_ms([&] { parallel = brute_one132_table(scan_n, 3); }, reps);
    report("brute_one132_table(n=" + std::to_string(scan_n) + ", k=3)", ts, tp,
           serial == parallel);
  }

  const BiSeries f = cf_F(series_k, series_order);
  {
    BiSeries serial(0), parallel(0);
    const double ts = time_ms([&] { serial = mul_serial(f, f); }, reps);
    const double tp = time_ms([&] { parallel = mul(f, f); }, reps);
    report("mul(F^2), k=" + std::to_string(series_k) + " order=" +
               std::to_string(series_order),
           ts, tp, serial == parallel);
  }

  {
    const BiSeries arg =
        sub(BiSeries::one(series_order), f.times_monomial(1, 1, 1));
    BiSeries serial(0), parallel(0);
    const double ts =
        time_ms([&] { serial = reciprocal_unit_serial(arg); }, reps);
    const double tp = time_ms([&] { parallel = reciprocal_unit(arg); }, reps);
    report("reciprocal_unit(1 - x y F)", ts, tp, serial == parallel);
  }

  return 0;
}
