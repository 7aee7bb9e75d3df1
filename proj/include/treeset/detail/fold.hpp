#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

namespace treeset::detail {

// Letter-labeled positive edges (src, letter, tgt) over vertices 0..nv-1.
struct FoldResult {
  int num_vertices = 0;
  std::vector<std::tuple<int, int32_t, int>> edges;  // deduped, sorted
  int base = 0;
};

// Iterated Stallings folding to the deterministic + co-deterministic
// fixpoint. `seed` shuffles the merge visiting order; any seed yields an
// isomorphic result (confluence), which the tests exercise.
FoldResult fold_edges(int num_vertices,
                      std::vector<std::tuple<int, int32_t, int>> edges,
                      int base, uint64_t seed = 0);

}  // namespace treeset::detail
