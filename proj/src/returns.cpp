#include "treeset/returns.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "treeset/errors.hpp"
#include "treeset/extension.hpp"
#include "treeset/freegroup.hpp"

namespace treeset {

namespace {

// Walks every extension path of x inside F. `stop_at_return` prunes a branch
// at its first return (first-return enumeration); otherwise branches run to
// the horizon and every return along the way is collected.
std::vector<Word> enumerate_returns(const FactorSet& F, const Word& x,
                                    bool stop_at_return) {
  if (!F.contains(x)) {
    throw std::invalid_argument("word is not a member of the factor set");
  }
  const size_t horizon = static_cast<size_t>(F.max_len());
  WordSet found;
  std::deque<Word> frontier{x};
  while (!frontier.empty()) {
    Word s = std::move(frontier.front());
    frontier.pop_front();
    if (s.size() >= horizon) {
      if (stop_at_return) {
        throw HorizonExceeded("extension path of length " +
                              std::to_string(s.size()) +
                              " did not return to the base word");
      }
      continue;  // certified earlier; this branch already returned
    }
    bool extended = false;
    for (int32_t b = 0; b < F.alphabet().size(); ++b) {
      Word t = s.appended(b);
      if (!F.contains(t)) continue;
      extended = true;
      if (t.size() > x.size() && t.ends_with(x)) {
        found.insert(t.suffix(t.size() - x.size()));
        if (stop_at_return) continue;
      }
      frontier.push_back(std::move(t));
    }
    if (!extended) {
      // A dead end below the horizon means the truncation is too ragged to
      // certify anything.
      throw HorizonExceeded("extension path hit a dead end at length " +
                            std::to_string(s.size()));
    }
  }
  return sorted_words(found);
}

}  // namespace

std::vector<Word> return_words(const FactorSet& F, const Word& x) {
  // Certify first, then enumerate everything within the horizon.
  enumerate_returns(F, x, true);
  return enumerate_returns(F, x, false);
}

ReturnSet first_return_words(const FactorSet& F, const Word& x) {
  ReturnSet out;
  out.base_word = x;
  out.horizon_used = F.max_len();
  out.words = enumerate_returns(F, x, true);
  return out;
}

std::vector<Word> first_return_words_oracle(const Word& prefix, const Word& x) {
  std::vector<size_t> occ = occurrences(prefix, x);
  if (occ.empty()) throw NoOccurrence("word does not occur in the prefix");
  WordSet found;
  for (size_t i = 0; i + 1 < occ.size(); ++i) {
    const size_t p = occ[i];
    const size_t q = occ[i + 1];
    // x r = prefix[p .. q + |x|), so r starts right after this occurrence.
    found.insert(prefix.subword(p + x.size(), q - p));
  }
  if (found.empty()) throw NoOccurrence("single occurrence, no returns");
  return sorted_words(found);
}

bool is_unioccurrent(const Word& x, const Word& y) {
  return occurrences(y, x).size() == 1;
}

namespace {

// Minimal-length e with x·e right-special (direction=right) or e·x
// left-special (direction=left). Level order keeps the search shortlex.
Word minimal_special_extension(const FactorSet& F, const Word& x, bool right) {
  const size_t max_ext =
      static_cast<size_t>(F.max_len()) >= x.size() + 2
          ? static_cast<size_t>(F.max_len()) - x.size() - 2
          : 0;
  std::deque<Word> frontier{Word()};
  size_t level = 0;
  std::vector<Word> hits;
  while (!frontier.empty()) {
    Word e = std::move(frontier.front());
    frontier.pop_front();
    if (e.size() > level) {
      if (!hits.empty()) break;
      level = e.size();
    }
    Word combined = right ? x + e : e + x;
    if (right ? is_right_special(F, combined) : is_left_special(F, combined)) {
      hits.push_back(e);
      continue;
    }
    if (e.size() >= max_ext) continue;
    for (int32_t b = 0; b < F.alphabet().size(); ++b) {
      Word next = right ? e.appended(b) : e.prepended(b);
      Word cand = right ? x + next : next + x;
      if (F.contains(cand)) frontier.push_back(std::move(next));
    }
  }
  if (hits.empty()) {
    // A bounded-complexity plateau is the truncation-level fingerprint of a
    // periodic set (the Rauzy graph degenerates to a cycle).
    int l = F.max_len();
    if (l >= 3 && complexity(F, l - 1) == complexity(F, l - 2)) {
      throw PeriodicSet("complexity plateau: the set looks periodic");
    }
    throw HorizonExceeded("no special extension found within the horizon");
  }
  std::sort(hits.begin(), hits.end(), shortlex_less);
  return hits.front();
}

}  // namespace

BispecialExtension shortest_bispecial_extension(const FactorSet& F,
                                                const Word& x) {
  BispecialExtension out;
  out.u = minimal_special_extension(F, x, false);
  out.v = minimal_special_extension(F, x, true);
  out.y = out.u + x + out.v;
  return out;
}

bool conjugacy_check(const FactorSet& F, const Word& x) {
  BispecialExtension e = shortest_bispecial_extension(F, x);
  ReturnSet rx = first_return_words(F, x);
  ReturnSet ry = first_return_words(F, e.y);
  WordSet transformed;
  for (const Word& r : ry.words) {
    if (!r.ends_with(e.v)) {
      throw ConjugacyViolated("element " +
                              format_word(r, F.alphabet()) +
                              " of R_F(y) does not end with v");
    }
    transformed.insert(e.v + r.prefix(r.size() - e.v.size()));
  }
  WordSet expected(rx.words.begin(), rx.words.end());
  if (transformed != expected) {
    for (const Word& w : transformed) {
      if (!expected.count(w)) {
        throw ConjugacyViolated("conjugated element " +
                                format_word(w, F.alphabet()) +
                                " is not a first return to x");
      }
    }
    for (const Word& w : expected) {
      if (!transformed.count(w)) {
        throw ConjugacyViolated("first return " +
                                format_word(w, F.alphabet()) +
                                " is missing from v R_F(y) v^-1");
      }
    }
  }
  return true;
}

std::optional<int> infinite_case_shape_check(const FactorSet& F, const Word& x,
                                             const TypeClass& T) {
  Word u, v, w, t;
  if (T.tag == TypeTag::Infinite1) {
    u = T.witness.at('u');
    v = T.witness.at('v');
    w = T.witness.at('w');
    t = T.witness.at('t');
  } else if (T.tag == TypeTag::Infinite2) {
    // The equivalent single-cycle graph: loop u, entry vw, loop tw, exit z.
    u = T.witness.at('u');
    v = T.witness.at('v') + T.witness.at('w');
    w = T.witness.at('t') + T.witness.at('w');
    t = T.witness.at('z');
  } else {
    throw std::invalid_argument("shape check applies to infinite types only");
  }
  ReturnSet r = first_return_words(F, x);
  WordSet actual(r.words.begin(), r.words.end());
  size_t longest = 0;
  for (const Word& m : r.words) longest = std::max(longest, m.size());
  for (int n = 0; v.size() + static_cast<size_t>(n) * w.size() + t.size() <= longest;
       ++n) {
    Word vwn = v;
    for (int i = 0; i < n; ++i) vwn = vwn + w;
    WordSet expected{u, vwn + t, vwn + w + t};
    if (expected == actual) return n;
  }
  return std::nullopt;
}

bool finite_case_table_check(const FactorSet& F, const Word& x,
                             const TypeClass& T) {
  ReturnSet r = first_return_words(F, x);
  WordSet actual(r.words.begin(), r.words.end());
  auto get = [&](char c) { return T.witness.at(c); };
  switch (T.tag) {
    case TypeTag::Finite1:
      return actual == WordSet{get('u'), get('v'), get('w')};
    case TypeTag::Finite2:
      return actual ==
             WordSet{get('u'), get('v') + get('w'), get('v') + get('t')};
    case TypeTag::Finite3:
      return actual ==
             WordSet{get('u'), get('v') + get('w'), get('t') + get('w')};
    case TypeTag::Finite4:
      return actual == WordSet{get('u'), get('v') + get('w') + get('z'),
                               get('v') + get('t') + get('z')};
    case TypeTag::Finite5:
      return actual == WordSet{get('u') + get('t'),
                               get('u') + get('w') + get('z'),
                               get('v') + get('z')};
    case TypeTag::Finite6:
    case TypeTag::Finite7: {
      if (actual.size() != 3) return false;
      std::vector<GroupElement> z_gens;
      if (T.tag == TypeTag::Finite6) {
        Word u = get('u'), v = get('v'), w = get('w'), t = get('t'), z = get('z');
        for (const Word& m : {u + z + w, u + z + t, v + z + t, v + z + w}) {
          z_gens.push_back(GroupElement::from_word(m));
        }
      } else {
        Word u = get('u'), v = get('v'), w = get('w'), t = get('t');
        for (const Word& m : {u + w, u + t, v + w, v + t}) {
          z_gens.push_back(GroupElement::from_word(m));
        }
      }
      StallingsGraph sub = subgroup_graph(z_gens, F.alphabet());
      for (const Word& m : actual) {
        if (!contains_element(sub, GroupElement::from_word(m))) return false;
      }
      return true;
    }
    default:
      throw std::invalid_argument("table check applies to finite types only");
  }
}

}  // namespace treeset
