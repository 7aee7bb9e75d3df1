#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "treeset/extension.hpp"
#include "treeset/sweep.hpp"

using namespace treeset;
using treeset::testing::make_set;

TEST_CASE("serial and parallel tree checks agree") {
  for (const char* spec : {"fib", "trib", "fib2", "chacon"}) {
    FactorSet F = make_set(spec, 12);
    CAPTURE(spec);
    TreeReport serial = check_tree_condition(F, 8, ExecMode::Serial);
    TreeReport parallel = check_tree_condition(F, 8, ExecMode::Parallel);
    CHECK(serial.ok == parallel.ok);
    CHECK(serial.counterexample == parallel.counterexample);
  }
}

TEST_CASE("serial and parallel theorem sweeps agree") {
  for (const char* spec : {"trib", "fib2"}) {
    FactorSet F = make_set(spec, 40);
    CAPTURE(spec);
    std::vector<TheoremRow> serial = theorem_sweep(F, 4, ExecMode::Serial);
    std::vector<TheoremRow> parallel = theorem_sweep(F, 4, ExecMode::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      CHECK(theorem_row_tsv(serial[i], F.alphabet()) ==
            theorem_row_tsv(parallel[i], F.alphabet()));
    }
  }
}
