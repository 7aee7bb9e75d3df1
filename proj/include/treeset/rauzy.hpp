#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeset/factor_set.hpp"
#include "treeset/freegroup.hpp"
#include "treeset/word.hpp"

namespace treeset {

// G_n: vertices F ∩ A^n in lexicographic order, edges (x, a, y) whenever
// xa in F and xa = (first letter of x) y.
struct RauzyGraph {
  int order = 0;
  std::vector<Word> vertices;
  struct Edge {
    int src;
    int32_t letter;
    int tgt;
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges;  // sorted
};

RauzyGraph rauzy_graph(const FactorSet& F, int n);

bool is_strongly_connected(const RauzyGraph& g);

// Word-labeled directed multigraph; Rauzy graphs embed with single-letter
// labels, type graphs carry longer ones.
struct LabeledGraph {
  struct Edge {
    int src;
    Word label;
    int tgt;
    bool operator==(const Edge&) const = default;
  };
  std::vector<std::string> vertex_names;  // display only
  std::vector<Edge> edges;
  std::optional<int> base;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
};

LabeledGraph to_labeled(const RauzyGraph& g, const Alphabet& a);

// Class id per vertex of rauzy_graph(F, n): ax ~ bx when a and b are
// connected inside the left side of the bipartite graph G(x). Defined for
// n >= 1 only.
std::vector<int> theta_equivalence(const FactorSet& F, int n);
// The classes as sorted word lists, for golden tests and reports.
std::vector<std::vector<Word>> theta_classes(const FactorSet& F, int n);

LabeledGraph quotient(const LabeledGraph& g, const std::vector<int>& cls);

// Label-preserving bijective morphism. When both graphs carry a base, the
// bijection must map one base to the other. Backtracking with degree/label
// signatures; the graphs here are tiny.
bool graphs_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

// Fully folded graph: deterministic and co-deterministic. Multi-letter
// labels are split into letter chains first; splitting preserves the
// defined group.
LabeledGraph stallings_fold(const LabeledGraph& g, uint64_t seed = 0);

bool is_rose(const LabeledGraph& g, const Alphabet& a);

// Free basis of the subgroup defined by G at `base`: fold, take a spanning
// tree, one generator per non-tree edge. Throws DisconnectedGraph.
std::vector<GroupElement> group_of_graph(const LabeledGraph& g, int base);

// Special vertices with non-special interior paths contracted.
// Throws NoSpecialVertex (the periodic case).
LabeledGraph type_graph(const RauzyGraph& g, const Alphabet& a);

enum class TypeTag {
  Finite1,
  Finite2,
  Finite3,
  Finite4,
  Finite5,
  Finite6,
  Finite7,
  Infinite1,
  Infinite2,
  Other,
};

const char* type_tag_name(TypeTag t);

struct TypeClass {
  TypeTag tag = TypeTag::Other;
  std::map<char, Word> witness;  // template edge names u,v,w,t,z -> labels
  Word bispecial;
};

// Matches T against the nine ternary 2n+1 templates, anchored at the given
// bispecial vertex. Brute force over shape bijections; templates have at
// most 3 vertices and 5 edges.
TypeClass classify_type(const LabeledGraph& T, const Word& bispecial,
                        const Alphabet& a);

std::string to_dot(const RauzyGraph& g, const Alphabet& a);
std::string to_dot(const LabeledGraph& g, const Alphabet& a);

}  // namespace treeset
