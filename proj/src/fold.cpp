#include "treeset/detail/fold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace treeset::detail {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

FoldResult fold_edges(int num_vertices,
                      std::vector<std::tuple<int, int32_t, int>> edges,
                      int base, uint64_t seed) {
  Dsu dsu(num_vertices);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // Out-determinism: two edges (v, a, p), (v, a, q) force p = q.
    std::map<std::pair<int, int32_t>, int> out;
    for (const auto& [s, a, t] : edges) {
      auto key = std::make_pair(dsu.find(s), a);
      auto [it, inserted] = out.try_emplace(key, dsu.find(t));
      if (!inserted) changed |= dsu.unite(it->second, dsu.find(t));
    }
    // Co-determinism: two edges (p, a, v), (q, a, v) force p = q.
    std::map<std::pair<int, int32_t>, int> in;
    for (const auto& [s, a, t] : edges) {
      auto key = std::make_pair(dsu.find(t), a);
      auto [it, inserted] = in.try_emplace(key, dsu.find(s));
      if (!inserted) changed |= dsu.unite(it->second, dsu.find(s));
    }
  }
  // Compact vertex ids, base first for a stable shape.
  std::vector<int> relabel(static_cast<size_t>(num_vertices), -1);
  int next = 0;
  relabel[static_cast<size_t>(dsu.find(base))] = next++;
  for (int v = 0; v < num_vertices; ++v) {
    int r = dsu.find(v);
    if (relabel[static_cast<size_t>(r)] < 0) relabel[static_cast<size_t>(r)] = next++;
  }
  FoldResult result;
  result.base = 0;
  for (auto& [s, a, t] : edges) {
    s = relabel[static_cast<size_t>(dsu.find(s))];
    t = relabel[static_cast<size_t>(dsu.find(t))];
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.edges = std::move(edges);
  result.num_vertices = next;
  return result;
}

}  // namespace treeset::detail
