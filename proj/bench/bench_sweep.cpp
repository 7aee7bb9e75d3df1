// Serial vs parallel timing for the tree check and the theorem sweep.
#include <chrono>
#include <cstdio>

#include "treeset/extension.hpp"
#include "treeset/generators.hpp"
#include "treeset/sweep.hpp"

using namespace treeset;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = Clock::now();
  f();
  return ms_since(t0);
}

void bench(const char* spec, int horizon, int tree_depth, int sweep_depth) {
  FactorSet F = Source::parse(spec).factor_set(
      horizon, std::max<size_t>(20000, 64 * static_cast<size_t>(horizon)));
  double tree_s = timed([&] { check_tree_condition(F, tree_depth, ExecMode::Serial); });
  double tree_p = timed([&] { check_tree_condition(F, tree_depth, ExecMode::Parallel); });
  double sweep_s = timed([&] { theorem_sweep(F, sweep_depth, ExecMode::Serial); });
  double sweep_p = timed([&] { theorem_sweep(F, sweep_depth, ExecMode::Parallel); });
  std::printf("%-8s tree(m=%d)  serial %8.2f ms  parallel %8.2f ms  (x%.2f)\n",
              spec, tree_depth, tree_s, tree_p, tree_s / tree_p);
  std::printf("%-8s sweep(m=%d) serial %8.2f ms  parallel %8.2f ms  (x%.2f)\n",
              spec, sweep_depth, sweep_s, sweep_p, sweep_s / sweep_p);
}

}  // namespace

int main() {
  bench("trib", 64, 24, 8);
  bench("fib2", 64, 24, 8);
  bench("fib", 64, 24, 8);
  return 0;
}
