#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "treeset/factor_set.hpp"
#include "treeset/generators.hpp"

namespace treeset::testing {

inline size_t default_prefix_len(int max_len) {
  if (const char* env = std::getenv("TREESET_PREFIX_LEN")) {
    return static_cast<size_t>(std::stoul(env));
  }
  return std::max<size_t>(20000, 64 * static_cast<size_t>(max_len));
}

inline FactorSet make_set(const std::string& spec, int max_len) {
  return Source::parse(spec).factor_set(max_len, default_prefix_len(max_len));
}

inline Word W(const std::string& text, const Alphabet& a) {
  return parse_word(text, a);
}

inline WordSet make_words(const std::vector<std::string>& texts,
                          const Alphabet& a) {
  WordSet out;
  for (const auto& t : texts) out.insert(parse_word(t, a));
  return out;
}

inline std::vector<Word> make_word_list(const std::vector<std::string>& texts,
                                        const Alphabet& a) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, a));
  return out;
}

}  // namespace treeset::testing
