#include "treeset/freegroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "treeset/detail/fold.hpp"
#include "treeset/errors.hpp"

namespace treeset {

GroupElement reduce(std::vector<SignedLetter> raw) {
  std::vector<SignedLetter> out;
  out.reserve(raw.size());
  for (const SignedLetter& x : raw) {
    if (!out.empty() && out.back().symbol == x.symbol &&
        out.back().sign == -x.sign) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return GroupElement::from_signed(std::move(out));
}

GroupElement GroupElement::from_signed(std::vector<SignedLetter> raw) {
  // Re-scan: callers may pass unreduced sequences.
  std::vector<SignedLetter> out;
  out.reserve(raw.size());
  for (const SignedLetter& x : raw) {
    if (!out.empty() && out.back().symbol == x.symbol &&
        out.back().sign == -x.sign) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  GroupElement e;
  e.letters_ = std::move(out);
  return e;
}

GroupElement GroupElement::from_word(const Word& w) {
  std::vector<SignedLetter> raw;
  raw.reserve(w.size());
  for (int32_t x : w) raw.push_back({x, +1});
  return from_signed(std::move(raw));
}

GroupElement GroupElement::inverse() const {
  std::vector<SignedLetter> raw;
  raw.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    raw.push_back({it->symbol, -it->sign});
  }
  GroupElement e;
  e.letters_ = std::move(raw);
  return e;
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  std::vector<SignedLetter> raw = letters_;
  raw.insert(raw.end(), other.letters_.begin(), other.letters_.end());
  return from_signed(std::move(raw));
}

bool GroupElement::operator<(const GroupElement& other) const {
  if (letters_.size() != other.letters_.size()) {
    return letters_.size() < other.letters_.size();
  }
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].symbol != other.letters_[i].symbol) {
      return letters_[i].symbol < other.letters_[i].symbol;
    }
    if (letters_[i].sign != other.letters_[i].sign) {
      return letters_[i].sign > other.letters_[i].sign;  // positive first
    }
  }
  return false;
}

StallingsGraph subgroup_graph(const std::vector<GroupElement>& gens,
                              const Alphabet& a, uint64_t seed) {
  (void)a;
  std::vector<std::tuple<int, int32_t, int>> edges;
  int next_vertex = 1;  // 0 is the base
  for (const GroupElement& g : gens) {
    int cur = 0;
    const auto& ls = g.letters();
    for (size_t i = 0; i < ls.size(); ++i) {
      int nxt = (i + 1 == ls.size()) ? 0 : next_vertex++;
      if (ls[i].sign > 0) {
        edges.emplace_back(cur, ls[i].symbol, nxt);
      } else {
        edges.emplace_back(nxt, ls[i].symbol, cur);
      }
      cur = nxt;
    }
  }
  auto folded = detail::fold_edges(next_vertex, std::move(edges), 0, seed);
  StallingsGraph g;
  g.num_vertices = folded.num_vertices;
  g.edges = std::move(folded.edges);
  g.base = folded.base;
  g.folded = true;
  return g;
}

namespace {

// Strip vertices of total degree <= 1 (base excepted) until none remain.
// Returns (vertex kept?, kept edge list).
std::pair<std::vector<char>, std::vector<std::tuple<int, int32_t, int>>> core_of(
    const StallingsGraph& g) {
  std::vector<char> alive(static_cast<size_t>(g.num_vertices), 1);
  std::vector<std::tuple<int, int32_t, int>> edges = g.edges;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> degree(static_cast<size_t>(g.num_vertices), 0);
    for (const auto& [s, a, t] : edges) {
      ++degree[static_cast<size_t>(s)];
      ++degree[static_cast<size_t>(t)];
    }
    for (int v = 0; v < g.num_vertices; ++v) {
      if (v != g.base && alive[static_cast<size_t>(v)] &&
          degree[static_cast<size_t>(v)] <= 1) {
        alive[static_cast<size_t>(v)] = 0;
        changed = true;
      }
    }
    if (changed) {
      std::erase_if(edges, [&](const auto& e) {
        return !alive[static_cast<size_t>(std::get<0>(e))] ||
               !alive[static_cast<size_t>(std::get<2>(e))];
      });
    }
  }
  return {std::move(alive), std::move(edges)};
}

}  // namespace

int rank(const StallingsGraph& g) {
  if (!g.folded) throw NotFolded();
  auto [alive, edges] = core_of(g);
  // Restrict to the base component; a folded bouquet is connected, but be
  // strict about the contract anyway.
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices));
  for (const auto& [s, a, t] : edges) {
    adj[static_cast<size_t>(s)].push_back(t);
    adj[static_cast<size_t>(t)].push_back(s);
  }
  std::vector<char> seen(static_cast<size_t>(g.num_vertices), 0);
  std::vector<int> stack{g.base};
  seen[static_cast<size_t>(g.base)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int n : adj[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(n)]) {
        seen[static_cast<size_t>(n)] = 1;
        stack.push_back(n);
      }
    }
  }
  long v_count = 0, e_count = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (alive[static_cast<size_t>(v)] && seen[static_cast<size_t>(v)]) ++v_count;
  }
  for (const auto& [s, a, t] : edges) {
    if (seen[static_cast<size_t>(s)]) ++e_count;
  }
  return static_cast<int>(e_count - v_count + 1);
}

bool contains_element(const StallingsGraph& g, const GroupElement& e) {
  if (!g.folded) throw NotFolded();
  std::map<std::pair<int, int32_t>, int> out, in;
  for (const auto& [s, a, t] : g.edges) {
    out[{s, a}] = t;
    in[{t, a}] = s;
  }
  int cur = g.base;
  for (const SignedLetter& x : e.letters()) {
    if (x.sign > 0) {
      auto it = out.find({cur, x.symbol});
      if (it == out.end()) return false;
      cur = it->second;
    } else {
      auto it = in.find({cur, x.symbol});
      if (it == in.end()) return false;
      cur = it->second;
    }
  }
  return cur == g.base;
}

bool is_basis_of_free_group(const std::vector<GroupElement>& gens,
                            const Alphabet& a) {
  std::set<GroupElement> unique(gens.begin(), gens.end());
  if (static_cast<int>(unique.size()) != a.size()) return false;
  StallingsGraph g = subgroup_graph(gens, a);
  auto [alive, edges] = core_of(g);
  int alive_count = 0;
  for (char c : alive) alive_count += c;
  if (alive_count != 1 || !alive[static_cast<size_t>(g.base)]) return false;
  if (static_cast<int>(edges.size()) != a.size()) return false;
  std::vector<char> letter_seen(static_cast<size_t>(a.size()), 0);
  for (const auto& [s, sym, t] : edges) {
    if (s != g.base || t != g.base) return false;
    if (letter_seen[static_cast<size_t>(sym)]) return false;
    letter_seen[static_cast<size_t>(sym)] = 1;
  }
  return true;
}

std::string format(const GroupElement& e, const Alphabet& a) {
  if (e.is_identity()) return "ε";
  std::string out;
  for (const SignedLetter& x : e.letters()) {
    out += a.symbol(x.symbol);
    if (x.sign < 0) out += '\'';
  }
  return out;
}

GroupElement parse_group_element(std::string_view text, const Alphabet& a) {
  if (text.empty() || text == "ε") return GroupElement::identity();
  std::vector<SignedLetter> raw;
  size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < a.size(); ++i) {
      const std::string& s = a.symbol(i);
      if (s.size() > best_len && text.substr(pos, s.size()) == s) {
        best = i;
        best_len = s.size();
      }
    }
    if (best < 0) {
      throw std::runtime_error("cannot parse group element at \"" +
                               std::string(text.substr(pos)) + "\"");
    }
    pos += best_len;
    int sign = +1;
    if (pos < text.size() && text[pos] == '\'') {
      sign = -1;
      ++pos;
    }
    raw.push_back({best, sign});
  }
  return GroupElement::from_signed(std::move(raw));
}

std::string to_dot(const StallingsGraph& g, const Alphabet& a) {
  std::ostringstream out;
  out << "digraph stallings {\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "  v" << v;
    if (v == g.base) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const auto& [s, sym, t] : g.edges) {
    out << "  v" << s << " -> v" << t << " [label=\"" << a.symbol(sym)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace treeset
