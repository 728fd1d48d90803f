// Serial reference sweep vs OpenMP sweep on the same seeded operand sets.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "ineqlab/search.hpp"

using namespace ineqlab;

namespace {

double time_ms(const std::function<SearchResult()>& run, SearchResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = run();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  std::printf("threads %d, trials %llu\n", omp_get_max_threads(), static_cast<unsigned long long>(trials));
  std::printf("%-28s %12s %12s %8s %s\n", "check", "serial ms", "parallel ms", "speedup", "agree");
  int mismatches = 0;
  for (const char* id : {"hanner_classic", "schotz_banach", "gen_parallelogram", "zhang_functional", "popoviciu_vec",
                         "truncated_convex"}) {
    const auto check = bind_check({id, "", "", {}});
    SearchResult s, p;
    const double ts = time_ms([&] { return probe_serial(check, trials, 42); }, s);
    const double tp = time_ms([&] { return probe_parallel(check, trials, 42); }, p);
    const bool agree = s.worst_margin == p.worst_margin && s.worst_index == p.worst_index && s.violations == p.violations;
    if (!agree) ++mismatches;
    std::printf("%-28s %12.2f %12.2f %8.2f %s\n", id, ts, tp, ts / tp, agree ? "yes" : "NO");
  }
  return mismatches == 0 ? 0 : 1;
}
