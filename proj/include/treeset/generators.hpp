#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "treeset/factor_set.hpp"
#include "treeset/word.hpp"

namespace treeset {

// A substitution (morphism) given by one image word per letter.
struct Substitution {
  Alphabet alphabet;
  std::vector<Word> images;  // indexed by letter

  Word apply(const Word& w) const;
};

// A prefix of the fixed point s^ω(seed) of length >= min_len.
// Throws NotProlongable unless images[seed] starts with seed and has
// length >= 2.
Word fixed_point_prefix(const Substitution& s, int32_t seed, size_t min_len);

// Splits w into consecutive non-overlapping blocks of length k and maps each
// block to a letter of `names`. Without an explicit table, names are assigned
// in order of first appearance. A trailing partial block is dropped.
using BlockTable = std::unordered_map<Word, int, WordHash>;
Word block_decode(const Word& w, int k, const Alphabet& names,
                  const std::optional<BlockTable>& table = std::nullopt);

FactorSet factor_set_from_prefix(const Word& p, int max_len, const Alphabet& a,
                                 std::string source_tag);

Substitution fibonacci_substitution();   // a -> ab, b -> a
Substitution tribonacci_substitution();  // a -> ab, b -> ac, c -> a
Substitution chacon_substitution();      // a -> aabc, b -> bc, c -> abc

// A named word source for the CLI and the test suites. Specifiers:
//   fib | trib | chacon | fib2 | subst:a=ab,b=a@a | file:<path>
class Source {
 public:
  static Source parse(const std::string& spec);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // A prefix of the source word of length >= min_len when the source is
  // infinite; file sources return the whole file content.
  Word prefix(size_t min_len) const;

  FactorSet factor_set(int max_len, size_t prefix_len) const;

 private:
  enum class Kind { Substitution, FibonacciBlock2, Literal };
  Kind kind_ = Kind::Substitution;
  std::string name_;
  Alphabet alphabet_;
  Substitution subst_;
  int32_t seed_ = 0;
  Word literal_;
};

}  // namespace treeset
