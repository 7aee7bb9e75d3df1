#pragma once

#include <optional>
#include <vector>

#include "treeset/factor_set.hpp"
#include "treeset/rauzy.hpp"
#include "treeset/word.hpp"

namespace treeset {

// The computed R_F(x), with provenance. Words in (length, lex) order; they
// form an antichain for the prefix order.
struct ReturnSet {
  Word base_word;
  std::vector<Word> words;
  int horizon_used = 0;
};

// Γ_F(x): all return words representable within the horizon. Throws
// HorizonExceeded when some extension path of x reaches the horizon without
// ever returning, i.e. completeness cannot be certified.
std::vector<Word> return_words(const FactorSet& F, const Word& x);

// R_F(x): prefix-minimal return words. Complete within the certified
// horizon: every extension path of x inside F returns before the horizon,
// otherwise HorizonExceeded.
ReturnSet first_return_words(const FactorSet& F, const Word& x);

// Independent oracle: scans consecutive occurrences of x in a long literal
// prefix. No factor-set machinery involved. Throws NoOccurrence.
std::vector<Word> first_return_words_oracle(const Word& prefix, const Word& x);

bool is_unioccurrent(const Word& x, const Word& y);

struct BispecialExtension {
  Word u;  // minimal with ux left-special
  Word v;  // minimal with xv right-special
  Word y;  // uxv, the unique shortest bispecial word containing x
};

// Throws HorizonExceeded or PeriodicSet.
BispecialExtension shortest_bispecial_extension(const FactorSet& F, const Word& x);

// Verifies R_F(x) = v R_F(y) v^{-1}, where v r v^{-1} strips the trailing v
// (every element of R_F(y) must end with v). Throws ConjugacyViolated with
// the offending element.
bool conjugacy_check(const FactorSet& F, const Word& x);

// For an Infinite1 witness (or Infinite2, reduced through the equivalent
// graph with labels u, vw, tw, z), returns the n with
// R_F(x) = {u, v w^n t, v w^{n+1} t}, or nullopt if no n fits.
std::optional<int> infinite_case_shape_check(const FactorSet& F, const Word& x,
                                             const TypeClass& T);

// Finite cases 1-5: exact match against the return table. Cases 6 and 7:
// |R_F(x)| = 3 and R_F(x) lies in the subgroup generated by Z.
bool finite_case_table_check(const FactorSet& F, const Word& x,
                             const TypeClass& T);

}  // namespace treeset
