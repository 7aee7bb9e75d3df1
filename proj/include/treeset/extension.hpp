#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeset/factor_set.hpp"
#include "treeset/word.hpp"

namespace treeset {

// The extension graph G(w), or a generalized G_{U,V}(w). Left and right
// vertices are disjoint copies; the same word may sit on both sides.
struct BipartiteExtensionGraph {
  std::vector<Word> left;
  std::vector<Word> right;
  std::vector<std::pair<int, int>> edges;  // (left index, right index), sorted
};

// L(w), R(w), E(w). All three require |w| + 2 <= horizon.
std::vector<int32_t> left_extensions(const FactorSet& F, const Word& w);
std::vector<int32_t> right_extensions(const FactorSet& F, const Word& w);
std::vector<std::pair<int32_t, int32_t>> extension_pairs(const FactorSet& F,
                                                         const Word& w);

bool is_left_special(const FactorSet& F, const Word& w);
bool is_right_special(const FactorSet& F, const Word& w);
bool is_bispecial(const FactorSet& F, const Word& w);

BipartiteExtensionGraph extension_graph(const FactorSet& F, const Word& w);

// Left vertices {l in U | lw in F}, right {r in V | wr in F}, edges lwr in F.
BipartiteExtensionGraph generalized_extension_graph(const FactorSet& F,
                                                    const Word& w,
                                                    const std::vector<Word>& U,
                                                    const std::vector<Word>& V);

// Connected and acyclic. The empty graph is not a tree; a single vertex is.
bool is_tree(const BipartiteExtensionGraph& g);

struct TreeReport {
  bool ok = true;
  Word counterexample;
  BipartiteExtensionGraph graph;  // the failing G(w), when !ok
};

enum class ExecMode { Serial, Parallel };

// Checks G(w) for every w in F with |w| <= up_to. The counterexample, if
// any, is the first failure in (length, lex) order regardless of ExecMode.
TreeReport check_tree_condition(const FactorSet& F, int up_to,
                                ExecMode mode = ExecMode::Serial);

// Card(F ∩ A^n).
size_t complexity(const FactorSet& F, int n);

// Left vertices prefixed L_, right prefixed R_; byte-reproducible ordering.
std::string to_dot(const BipartiteExtensionGraph& g, const Alphabet& a);

}  // namespace treeset
