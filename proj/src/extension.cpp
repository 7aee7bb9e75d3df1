#include "treeset/extension.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treeset {

namespace {

void require_headroom(const FactorSet& F, const Word& w) {
  if (static_cast<int>(w.size()) + 2 > F.max_len()) {
    throw HorizonExceeded("extension query on a word of length " +
                          std::to_string(w.size()) + " needs horizon >= " +
                          std::to_string(w.size() + 2));
  }
}

}  // namespace

std::vector<int32_t> left_extensions(const FactorSet& F, const Word& w) {
  require_headroom(F, w);
  std::vector<int32_t> out;
  for (int32_t a = 0; a < F.alphabet().size(); ++a) {
    if (F.contains(w.prepended(a))) out.push_back(a);
  }
  return out;
}

std::vector<int32_t> right_extensions(const FactorSet& F, const Word& w) {
  require_headroom(F, w);
  std::vector<int32_t> out;
  for (int32_t b = 0; b < F.alphabet().size(); ++b) {
    if (F.contains(w.appended(b))) out.push_back(b);
  }
  return out;
}

std::vector<std::pair<int32_t, int32_t>> extension_pairs(const FactorSet& F,
                                                         const Word& w) {
  require_headroom(F, w);
  std::vector<std::pair<int32_t, int32_t>> out;
  for (int32_t a = 0; a < F.alphabet().size(); ++a) {
    Word aw = w.prepended(a);
    for (int32_t b = 0; b < F.alphabet().size(); ++b) {
      if (F.contains(aw.appended(b))) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_left_special(const FactorSet& F, const Word& w) {
  return left_extensions(F, w).size() >= 2;
}

bool is_right_special(const FactorSet& F, const Word& w) {
  return right_extensions(F, w).size() >= 2;
}

bool is_bispecial(const FactorSet& F, const Word& w) {
  return is_left_special(F, w) && is_right_special(F, w);
}

BipartiteExtensionGraph extension_graph(const FactorSet& F, const Word& w) {
  BipartiteExtensionGraph g;
  auto ls = left_extensions(F, w);
  auto rs = right_extensions(F, w);
  for (int32_t a : ls) g.left.push_back(Word(std::vector<int32_t>{a}));
  for (int32_t b : rs) g.right.push_back(Word(std::vector<int32_t>{b}));
  for (size_t i = 0; i < ls.size(); ++i) {
    Word aw = w.prepended(ls[i]);
    for (size_t j = 0; j < rs.size(); ++j) {
      if (F.contains(aw.appended(rs[j]))) {
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

BipartiteExtensionGraph generalized_extension_graph(const FactorSet& F,
                                                    const Word& w,
                                                    const std::vector<Word>& U,
                                                    const std::vector<Word>& V) {
  size_t max_l = 0, max_r = 0;
  for (const Word& u : U) max_l = std::max(max_l, u.size());
  for (const Word& v : V) max_r = std::max(max_r, v.size());
  if (max_l + w.size() + max_r > static_cast<size_t>(F.max_len())) {
    throw HorizonExceeded("generalized extension graph needs horizon >= " +
                          std::to_string(max_l + w.size() + max_r));
  }
  BipartiteExtensionGraph g;
  std::vector<Word> U_sorted = U, V_sorted = V;
  std::sort(U_sorted.begin(), U_sorted.end(), shortlex_less);
  std::sort(V_sorted.begin(), V_sorted.end(), shortlex_less);
  for (const Word& u : U_sorted) {
    if (F.contains(u + w)) g.left.push_back(u);
  }
  for (const Word& v : V_sorted) {
    if (F.contains(w + v)) g.right.push_back(v);
  }
  for (size_t i = 0; i < g.left.size(); ++i) {
    Word lw = g.left[i] + w;
    for (size_t j = 0; j < g.right.size(); ++j) {
      if (F.contains(lw + g.right[j])) {
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

bool is_tree(const BipartiteExtensionGraph& g) {
  const size_t vertices = g.left.size() + g.right.size();
  if (vertices == 0) return false;
  if (g.edges.size() != vertices - 1) return false;
  // Connectivity over the bipartite union; right vertex j is node left+j.
  std::vector<std::vector<size_t>> adj(vertices);
  for (auto [i, j] : g.edges) {
    size_t l = static_cast<size_t>(i);
    size_t r = g.left.size() + static_cast<size_t>(j);
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  std::vector<char> seen(vertices, 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t n : adj[v]) {
      if (!seen[n]) {
        seen[n] = 1;
        ++reached;
        stack.push_back(n);
      }
    }
  }
  return reached == vertices;
}

TreeReport check_tree_condition(const FactorSet& F, int up_to, ExecMode mode) {
  if (up_to + 2 > F.max_len()) {
    throw HorizonExceeded("tree check up to length " + std::to_string(up_to) +
                          " needs horizon >= " + std::to_string(up_to + 2));
  }
  std::vector<Word> words = F.words_up_to(up_to);  // shortlex, the canonical order
  std::vector<char> fails(words.size(), 0);
  const auto n = static_cast<long>(words.size());
  if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long i = 0; i < n; ++i) {
      fails[static_cast<size_t>(i)] =
          !is_tree(extension_graph(F, words[static_cast<size_t>(i)]));
    }
  } else {
    for (long i = 0; i < n; ++i) {
      fails[static_cast<size_t>(i)] =
          !is_tree(extension_graph(F, words[static_cast<size_t>(i)]));
    }
  }
  TreeReport report;
  for (size_t i = 0; i < words.size(); ++i) {
    if (fails[i]) {
      report.ok = false;
      report.counterexample = words[i];
      report.graph = extension_graph(F, words[i]);
      break;
    }
  }
  return report;
}

size_t complexity(const FactorSet& F, int n) {
  return F.words_of_length(n).size();
}

std::string to_dot(const BipartiteExtensionGraph& g, const Alphabet& a) {
  std::ostringstream out;
  out << "graph extension {\n";
  for (const Word& w : g.left) {
    out << "  \"L_" << format_word(w, a) << "\";\n";
  }
  for (const Word& w : g.right) {
    out << "  \"R_" << format_word(w, a) << "\";\n";
  }
  for (auto [i, j] : g.edges) {
    out << "  \"L_" << format_word(g.left[static_cast<size_t>(i)], a)
        << "\" -- \"R_" << format_word(g.right[static_cast<size_t>(j)], a)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace treeset
