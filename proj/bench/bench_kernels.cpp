// Serial vs OpenMP timings for the d3 table and the bar boundary assembly.

#include "lazyhom/builders.hpp"
#include "lazyhom/lazy_h2.hpp"
#include "lazyhom/oracles.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

using namespace lazyhom;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& kernel, const std::string& input, double serial, double parallel, bool same) {
  std::printf("%-14s %-12s %10.4f %10.4f %7.2fx  %s\n", kernel.c_str(), input.c_str(), serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-14s %-12s %10s %10s %8s\n", "kernel", "input", "serial s", "omp s", "speedup");

  for (const std::string spec : {"sweedler", "group:S3", "group:D4", "group:Q8"}) {
    Checks checks(false);
    const LazyContext ctx = build_lazy_context(builtin_hopf(spec), checks);
    std::vector<Element> s, p;
    const double ts = best_of(reps, [&] { s = d3_table_serial(ctx); });
    const double tp = best_of(reps, [&] { p = d3_table_parallel(ctx); });
    row("d3 table", spec.substr(spec.find(':') + 1), ts, tp, s == p);
  }

  for (const std::string name : {"S3", "D4", "Q8"}) {
    const FiniteGroup g = group_by_name(name);
    for (unsigned n : {3u, 4u}) {
      ZMatrix s, p;
      const double ts = best_of(reps, [&] { s = bar_boundary_serial(g, n); });
      const double tp = best_of(reps, [&] { p = bar_boundary_parallel(g, n); });
      row("bar d_" + std::to_string(n), name, ts, tp, s == p);
    }
  }
}
