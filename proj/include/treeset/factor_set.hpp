#pragma once

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "treeset/errors.hpp"
#include "treeset/word.hpp"

namespace treeset {

using WordSet = std::unordered_set<Word, WordHash>;

// A finite factorial-closed truncation of a language F, up to an explicit
// length horizon. The infinite language exists only mathematically; every
// query past the horizon throws HorizonExceeded rather than answering.
class FactorSet {
 public:
  FactorSet(Alphabet alphabet, int max_len, WordSet members, std::string source_tag);

  // All factors of `p` of length <= L. Certifies stabilization: the factor
  // sets of `p` and of its half-length truncation must agree at every length
  // <= L, otherwise StabilizationFailed. Requires |p| >= 4 L.
  static FactorSet from_prefix(const Word& p, int max_len, Alphabet alphabet,
                               std::string source_tag);

  const Alphabet& alphabet() const { return alphabet_; }
  int max_len() const { return max_len_; }
  const std::string& source_tag() const { return source_tag_; }
  size_t size() const { return members_.size(); }

  // Throws HorizonExceeded when |w| > max_len.
  bool contains(const Word& w) const;

  // Members of exactly length n, in lexicographic order.
  const std::vector<Word>& words_of_length(int n) const;
  // Members of length <= m, shortlex order.
  std::vector<Word> words_up_to(int m) const;

  const WordSet& members() const { return members_; }

 private:
  Alphabet alphabet_;
  int max_len_ = 0;
  std::string source_tag_;
  WordSet members_;
  std::vector<std::vector<Word>> by_length_;
};

// { v | uv in X }. The right residual of X with respect to u; not to be
// confused with inversion in the free group (that lives in freegroup.hpp).
WordSet residual(const Word& u, const WordSet& X);

bool is_factorial(const WordSet& S);

// No element is a proper prefix (resp. suffix) of another.
// Throws EmptyWordInCode when the empty word is present.
bool is_prefix_code(const WordSet& V);
bool is_suffix_code(const WordSet& U);

// F-maximality, read as: every word of F no longer than
// the longest element of V is prefix-comparable with some element of V.
bool is_F_maximal_prefix_code(const WordSet& V, const FactorSet& F);
bool is_F_maximal_suffix_code(const WordSet& U, const FactorSet& F);

std::vector<Word> sorted_words(const WordSet& S);

// Text format: one word per line, symbols concatenated, '#' comments,
// blank lines ignored.
WordSet read_word_set(std::istream& in, const Alphabet& a);
void write_word_set(std::ostream& out, const WordSet& S, const Alphabet& a);

}  // namespace treeset
