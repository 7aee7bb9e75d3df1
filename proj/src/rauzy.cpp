#include "treeset/rauzy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "treeset/detail/fold.hpp"
#include "treeset/errors.hpp"
#include "treeset/extension.hpp"

namespace treeset {

RauzyGraph rauzy_graph(const FactorSet& F, int n) {
  if (n < 0) throw std::invalid_argument("Rauzy graph order must be >= 0");
  if (n + 1 > F.max_len()) {
    throw HorizonExceeded("Rauzy graph of order " + std::to_string(n) +
                          " needs horizon >= " + std::to_string(n + 1));
  }
  RauzyGraph g;
  g.order = n;
  g.vertices = F.words_of_length(n);
  std::unordered_map<Word, int, WordHash> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    index.emplace(g.vertices[i], static_cast<int>(i));
  }
  for (const Word& xa : F.words_of_length(n + 1)) {
    Word x = xa.prefix(static_cast<size_t>(n));
    Word y = xa.suffix(static_cast<size_t>(n));
    g.edges.push_back({index.at(x), xa[static_cast<size_t>(n)], index.at(y)});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool is_strongly_connected(const RauzyGraph& g) {
  const size_t n = g.vertices.size();
  if (n <= 1) return true;
  auto reach = [&](bool forward) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
      if (forward) {
        adj[static_cast<size_t>(e.src)].push_back(e.tgt);
      } else {
        adj[static_cast<size_t>(e.tgt)].push_back(e.src);
      }
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reach(true) && reach(false);
}

LabeledGraph to_labeled(const RauzyGraph& g, const Alphabet& a) {
  LabeledGraph out;
  for (const Word& w : g.vertices) out.vertex_names.push_back(format_word(w, a));
  for (const auto& e : g.edges) {
    out.edges.push_back({e.src, Word(std::vector<int32_t>{e.letter}), e.tgt});
  }
  return out;
}

std::vector<int> theta_equivalence(const FactorSet& F, int n) {
  if (n < 1) throw std::invalid_argument("theta_n is defined for n >= 1 only");
  RauzyGraph g = rauzy_graph(F, n);
  std::unordered_map<Word, int, WordHash> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    index.emplace(g.vertices[i], static_cast<int>(i));
  }
  // ax ~ bx when a, b are connected in the bipartite graph G(x).
  std::vector<int> cls(g.vertices.size(), -1);
  int next_class = 0;
  for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
    if (cls[vi] >= 0) continue;
    const Word& v = g.vertices[vi];
    Word x = v.suffix(static_cast<size_t>(n - 1));
    BipartiteExtensionGraph gx = extension_graph(F, x);
    // Components of the undirected bipartite graph.
    const size_t total = gx.left.size() + gx.right.size();
    std::vector<std::vector<size_t>> adj(total);
    for (auto [i, j] : gx.edges) {
      size_t l = static_cast<size_t>(i);
      size_t r = gx.left.size() + static_cast<size_t>(j);
      adj[l].push_back(r);
      adj[r].push_back(l);
    }
    // Locate the left vertex for v's first letter.
    size_t start = gx.left.size();
    for (size_t i = 0; i < gx.left.size(); ++i) {
      if (gx.left[i][0] == v[0]) start = i;
    }
    if (start == gx.left.size()) {
      throw std::logic_error("vertex letter missing from its extension graph");
    }
    std::vector<char> seen(total, 0);
    std::vector<size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      size_t p = stack.back();
      stack.pop_back();
      for (size_t q : adj[p]) {
        if (!seen[q]) {
          seen[q] = 1;
          stack.push_back(q);
        }
      }
    }
    int id = next_class++;
    for (size_t i = 0; i < gx.left.size(); ++i) {
      if (!seen[i]) continue;
      Word ax = x.prepended(gx.left[i][0]);
      auto it = index.find(ax);
      if (it != index.end()) cls[static_cast<size_t>(it->second)] = id;
    }
  }
  return cls;
}

std::vector<std::vector<Word>> theta_classes(const FactorSet& F, int n) {
  RauzyGraph g = rauzy_graph(F, n);
  std::vector<int> cls = theta_equivalence(F, n);
  int classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<Word>> out(static_cast<size_t>(classes));
  for (size_t i = 0; i < cls.size(); ++i) {
    out[static_cast<size_t>(cls[i])].push_back(g.vertices[i]);
  }
  for (auto& c : out) std::sort(c.begin(), c.end(), shortlex_less);
  return out;
}

LabeledGraph quotient(const LabeledGraph& g, const std::vector<int>& cls) {
  if (cls.size() != static_cast<size_t>(g.num_vertices())) {
    throw std::invalid_argument("partition does not cover all vertices");
  }
  int classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  LabeledGraph out;
  out.vertex_names.assign(static_cast<size_t>(classes), "");
  for (size_t v = 0; v < cls.size(); ++v) {
    std::string& name = out.vertex_names[static_cast<size_t>(cls[v])];
    if (!name.empty()) name += "|";
    name += g.vertex_names[v];
  }
  for (const auto& e : g.edges) {
    LabeledGraph::Edge q{cls[static_cast<size_t>(e.src)], e.label,
                         cls[static_cast<size_t>(e.tgt)]};
    if (std::find(out.edges.begin(), out.edges.end(), q) == out.edges.end()) {
      out.edges.push_back(q);
    }
  }
  if (g.base) out.base = cls[static_cast<size_t>(*g.base)];
  return out;
}

namespace {

// Sorted multiset signature of a vertex's incident labels.
std::string vertex_signature(const LabeledGraph& g, int v) {
  std::vector<std::string> out_l, in_l;
  for (const auto& e : g.edges) {
    std::string lab;
    for (int32_t c : e.label) lab += std::to_string(c) + ".";
    if (e.src == v) out_l.push_back(lab);
    if (e.tgt == v) in_l.push_back(lab);
  }
  std::sort(out_l.begin(), out_l.end());
  std::sort(in_l.begin(), in_l.end());
  std::string sig = "o:";
  for (auto& s : out_l) sig += s + ",";
  sig += "i:";
  for (auto& s : in_l) sig += s + ",";
  return sig;
}

using LabelKey = std::vector<int32_t>;

// Multiset of labels on each ordered vertex pair.
std::map<std::pair<int, int>, std::multiset<LabelKey>> pair_labels(
    const LabeledGraph& g) {
  std::map<std::pair<int, int>, std::multiset<LabelKey>> out;
  for (const auto& e : g.edges) {
    out[{e.src, e.tgt}].insert(e.label.letters());
  }
  return out;
}

bool extend_mapping(const LabeledGraph& g, const LabeledGraph& h,
                    const std::vector<std::string>& sig_g,
                    const std::vector<std::string>& sig_h,
                    const std::map<std::pair<int, int>, std::multiset<LabelKey>>& pg,
                    const std::map<std::pair<int, int>, std::multiset<LabelKey>>& ph,
                    std::vector<int>& map_gh, std::vector<char>& used,
                    size_t next) {
  const size_t n = static_cast<size_t>(g.num_vertices());
  if (next == n) return true;
  for (int cand = 0; cand < h.num_vertices(); ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    if (sig_g[next] != sig_h[static_cast<size_t>(cand)]) continue;
    if (g.base && h.base &&
        ((static_cast<int>(next) == *g.base) != (cand == *h.base))) {
      continue;
    }
    bool consistent = true;
    for (size_t prev = 0; prev <= next && consistent; ++prev) {
      int pv = (prev == next) ? cand : map_gh[prev];
      if (prev < next && pv < 0) continue;
      for (auto [p, q] :
           {std::pair<int, int>{static_cast<int>(prev), static_cast<int>(next)},
            std::pair<int, int>{static_cast<int>(next), static_cast<int>(prev)}}) {
        auto git = pg.find({p, q});
        int hp = (p == static_cast<int>(next)) ? cand : map_gh[static_cast<size_t>(p)];
        int hq = (q == static_cast<int>(next)) ? cand : map_gh[static_cast<size_t>(q)];
        auto hit = ph.find({hp, hq});
        const bool g_has = git != pg.end();
        const bool h_has = hit != ph.end();
        if (g_has != h_has || (g_has && git->second != hit->second)) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent) continue;
    map_gh[next] = cand;
    used[static_cast<size_t>(cand)] = 1;
    if (extend_mapping(g, h, sig_g, sig_h, pg, ph, map_gh, used, next + 1)) {
      return true;
    }
    map_gh[next] = -1;
    used[static_cast<size_t>(cand)] = 0;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.num_vertices() != h.num_vertices()) return false;
  if (g.edges.size() != h.edges.size()) return false;
  std::multiset<LabelKey> lg, lh;
  for (const auto& e : g.edges) lg.insert(e.label.letters());
  for (const auto& e : h.edges) lh.insert(e.label.letters());
  if (lg != lh) return false;
  std::vector<std::string> sig_g, sig_h;
  for (int v = 0; v < g.num_vertices(); ++v) sig_g.push_back(vertex_signature(g, v));
  for (int v = 0; v < h.num_vertices(); ++v) sig_h.push_back(vertex_signature(h, v));
  {
    auto a = sig_g;
    auto b = sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  auto pg = pair_labels(g);
  auto ph = pair_labels(h);
  std::vector<int> map_gh(static_cast<size_t>(g.num_vertices()), -1);
  std::vector<char> used(static_cast<size_t>(h.num_vertices()), 0);
  return extend_mapping(g, h, sig_g, sig_h, pg, ph, map_gh, used, 0);
}

LabeledGraph stallings_fold(const LabeledGraph& g, uint64_t seed) {
  // Split multi-letter labels into chains of fresh vertices; the base and
  // the defined group are unchanged.
  std::vector<std::tuple<int, int32_t, int>> edges;
  int next_vertex = g.num_vertices();
  for (const auto& e : g.edges) {
    if (e.label.empty()) {
      throw std::invalid_argument("labels must be nonempty words");
    }
    int cur = e.src;
    for (size_t i = 0; i < e.label.size(); ++i) {
      int nxt = (i + 1 == e.label.size()) ? e.tgt : next_vertex++;
      edges.emplace_back(cur, e.label[i], nxt);
      cur = nxt;
    }
  }
  int base = g.base.value_or(0);
  auto folded = detail::fold_edges(next_vertex, std::move(edges), base, seed);
  LabeledGraph out;
  out.vertex_names.reserve(static_cast<size_t>(folded.num_vertices));
  for (int v = 0; v < folded.num_vertices; ++v) {
    out.vertex_names.push_back(std::to_string(v));
  }
  for (const auto& [s, a, t] : folded.edges) {
    out.edges.push_back({s, Word(std::vector<int32_t>{a}), t});
  }
  out.base = folded.base;
  return out;
}

bool is_rose(const LabeledGraph& g, const Alphabet& a) {
  if (g.num_vertices() != 1) return false;
  if (g.edges.size() != static_cast<size_t>(a.size())) return false;
  std::vector<char> seen(static_cast<size_t>(a.size()), 0);
  for (const auto& e : g.edges) {
    if (e.src != 0 || e.tgt != 0 || e.label.size() != 1) return false;
    if (seen[static_cast<size_t>(e.label[0])]) return false;
    seen[static_cast<size_t>(e.label[0])] = 1;
  }
  return true;
}

std::vector<GroupElement> group_of_graph(const LabeledGraph& g, int base) {
  LabeledGraph graph = g;
  graph.base = base;
  LabeledGraph folded = stallings_fold(graph);
  const size_t n = static_cast<size_t>(folded.num_vertices());
  // BFS spanning tree from the (relabeled) base.
  std::vector<std::vector<std::pair<int, SignedLetter>>> adj(n);
  for (const auto& e : folded.edges) {
    adj[static_cast<size_t>(e.src)].push_back({e.tgt, {e.label[0], +1}});
    adj[static_cast<size_t>(e.tgt)].push_back({e.src, {e.label[0], -1}});
  }
  const int root = folded.base.value();
  std::vector<GroupElement> path(n);
  std::vector<char> seen(n, 0);
  std::vector<std::tuple<int, int32_t, int>> tree_edges;
  std::queue<int> queue;
  queue.push(root);
  seen[static_cast<size_t>(root)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [w, step] : adj[static_cast<size_t>(v)]) {
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      path[static_cast<size_t>(w)] =
          path[static_cast<size_t>(v)] *
          GroupElement::from_signed({step});
      if (step.sign > 0) {
        tree_edges.emplace_back(v, step.symbol, w);
      } else {
        tree_edges.emplace_back(w, step.symbol, v);
      }
      queue.push(w);
    }
  }
  for (char s : seen) {
    if (!s) throw DisconnectedGraph();
  }
  std::vector<GroupElement> gens;
  for (const auto& e : folded.edges) {
    auto key = std::make_tuple(e.src, e.label[0], e.tgt);
    auto it = std::find(tree_edges.begin(), tree_edges.end(), key);
    if (it != tree_edges.end()) {
      tree_edges.erase(it);  // each tree edge is spent once
      continue;
    }
    GroupElement gen = path[static_cast<size_t>(e.src)] *
                       GroupElement::from_signed({{e.label[0], +1}}) *
                       path[static_cast<size_t>(e.tgt)].inverse();
    if (!gen.is_identity()) gens.push_back(gen);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

LabeledGraph type_graph(const RauzyGraph& g, const Alphabet& a) {
  const size_t n = g.vertices.size();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  std::vector<std::vector<std::pair<int32_t, int>>> out(n);
  for (const auto& e : g.edges) {
    ++outdeg[static_cast<size_t>(e.src)];
    ++indeg[static_cast<size_t>(e.tgt)];
    out[static_cast<size_t>(e.src)].push_back({e.letter, e.tgt});
  }
  std::vector<int> special_id(n, -1);
  LabeledGraph t;
  for (size_t v = 0; v < n; ++v) {
    if (indeg[v] > 1 || outdeg[v] > 1) {
      special_id[v] = t.num_vertices();
      t.vertex_names.push_back(format_word(g.vertices[v], a));
    }
  }
  if (t.num_vertices() == 0) throw NoSpecialVertex();
  for (size_t v = 0; v < n; ++v) {
    if (special_id[v] < 0) continue;
    for (auto [letter, next] : out[v]) {
      std::vector<int32_t> label{letter};
      int cur = next;
      size_t guard = 0;
      while (special_id[static_cast<size_t>(cur)] < 0) {
        if (out[static_cast<size_t>(cur)].size() != 1) {
          throw std::logic_error("non-special vertex without unique successor");
        }
        auto [l2, nxt] = out[static_cast<size_t>(cur)][0];
        label.push_back(l2);
        cur = nxt;
        if (++guard > g.edges.size()) {
          throw std::logic_error("runaway path in type graph contraction");
        }
      }
      t.edges.push_back({special_id[v], Word(std::move(label)),
                         special_id[static_cast<size_t>(cur)]});
    }
  }
  return t;
}

const char* type_tag_name(TypeTag t) {
  switch (t) {
    case TypeTag::Finite1: return "Finite1";
    case TypeTag::Finite2: return "Finite2";
    case TypeTag::Finite3: return "Finite3";
    case TypeTag::Finite4: return "Finite4";
    case TypeTag::Finite5: return "Finite5";
    case TypeTag::Finite6: return "Finite6";
    case TypeTag::Finite7: return "Finite7";
    case TypeTag::Infinite1: return "Infinite1";
    case TypeTag::Infinite2: return "Infinite2";
    case TypeTag::Other: return "Other";
  }
  return "Other";
}

namespace {

struct Template {
  TypeTag tag;
  int num_vertices;  // role 0 is the bispecial vertex x
  std::vector<std::tuple<int, int, char>> edges;  // (src role, tgt role, name)
};

const std::vector<Template>& templates() {
  static const std::vector<Template> all = {
      {TypeTag::Finite1, 1, {{0, 0, 'u'}, {0, 0, 'v'}, {0, 0, 'w'}}},
      {TypeTag::Finite2, 2, {{0, 0, 'u'}, {1, 0, 'w'}, {1, 0, 't'}, {0, 1, 'v'}}},
      {TypeTag::Finite3, 2, {{0, 0, 'u'}, {0, 1, 'v'}, {0, 1, 't'}, {1, 0, 'w'}}},
      {TypeTag::Finite4,
       3,
       {{0, 0, 'u'}, {0, 1, 'v'}, {2, 0, 'z'}, {1, 2, 'w'}, {1, 2, 't'}}},
      {TypeTag::Finite5,
       3,
       {{1, 2, 'w'}, {1, 0, 't'}, {0, 1, 'u'}, {2, 0, 'z'}, {0, 2, 'v'}}},
      {TypeTag::Finite6,
       3,
       {{1, 2, 'z'}, {0, 1, 'u'}, {0, 1, 'v'}, {2, 0, 'w'}, {2, 0, 't'}}},
      {TypeTag::Finite7, 2, {{0, 1, 'u'}, {0, 1, 'v'}, {1, 0, 'w'}, {1, 0, 't'}}},
      {TypeTag::Infinite1, 2, {{0, 0, 'u'}, {1, 1, 'w'}, {0, 1, 'v'}, {1, 0, 't'}}},
      {TypeTag::Infinite2,
       3,
       {{0, 0, 'u'}, {0, 1, 'v'}, {1, 2, 'w'}, {2, 1, 't'}, {2, 0, 'z'}}},
  };
  return all;
}

bool match_template(const Template& tpl, const LabeledGraph& t, int x_index,
                    std::map<char, Word>* witness) {
  if (t.num_vertices() != tpl.num_vertices) return false;
  if (t.edges.size() != tpl.edges.size()) return false;
  // Candidate role -> vertex maps anchored at x.
  std::vector<int> others;
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (v != x_index) others.push_back(v);
  }
  std::sort(others.begin(), others.end());
  do {
    std::vector<int> role(static_cast<size_t>(tpl.num_vertices));
    role[0] = x_index;
    for (size_t i = 0; i < others.size(); ++i) role[i + 1] = others[i];
    // Group labels and names per ordered vertex pair.
    std::map<std::pair<int, int>, std::vector<Word>> labels;
    for (const auto& e : t.edges) labels[{e.src, e.tgt}].push_back(e.label);
    std::map<std::pair<int, int>, std::vector<char>> names;
    for (const auto& [s, d, name] : tpl.edges) {
      names[{role[static_cast<size_t>(s)], role[static_cast<size_t>(d)]}]
          .push_back(name);
    }
    bool ok = labels.size() == names.size();
    if (ok) {
      std::map<char, Word> bound;
      for (auto& [key, labs] : labels) {
        auto it = names.find(key);
        if (it == names.end() || it->second.size() != labs.size()) {
          ok = false;
          break;
        }
        std::sort(labs.begin(), labs.end(), shortlex_less);
        std::sort(it->second.begin(), it->second.end());
        for (size_t i = 0; i < labs.size(); ++i) bound[it->second[i]] = labs[i];
      }
      if (ok) {
        *witness = std::move(bound);
        return true;
      }
    }
  } while (std::next_permutation(others.begin(), others.end()));
  return false;
}

}  // namespace

TypeClass classify_type(const LabeledGraph& T, const Word& bispecial,
                        const Alphabet& a) {
  TypeClass result;
  result.bispecial = bispecial;
  const std::string name = format_word(bispecial, a);
  int x_index = -1;
  for (int v = 0; v < T.num_vertices(); ++v) {
    if (T.vertex_names[static_cast<size_t>(v)] == name) x_index = v;
  }
  if (x_index < 0) return result;
  for (const Template& tpl : templates()) {
    std::map<char, Word> witness;
    if (match_template(tpl, T, x_index, &witness)) {
      result.tag = tpl.tag;
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

std::string to_dot(const RauzyGraph& g, const Alphabet& a) {
  std::ostringstream out;
  out << "digraph rauzy_" << g.order << " {\n";
  for (const Word& v : g.vertices) {
    out << "  \"" << format_word(v, a) << "\";\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << format_word(g.vertices[static_cast<size_t>(e.src)], a)
        << "\" -> \"" << format_word(g.vertices[static_cast<size_t>(e.tgt)], a)
        << "\" [label=\"" << a.symbol(e.letter) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const LabeledGraph& g, const Alphabet& a) {
  std::ostringstream out;
  out << "digraph labeled {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  \"" << g.vertex_names[static_cast<size_t>(v)] << "\"";
    if (g.base && *g.base == v) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << g.vertex_names[static_cast<size_t>(e.src)] << "\" -> \""
        << g.vertex_names[static_cast<size_t>(e.tgt)] << "\" [label=\""
        << format_word(e.label, a) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace treeset
