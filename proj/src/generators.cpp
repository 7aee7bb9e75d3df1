#include "treeset/generators.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "treeset/errors.hpp"

namespace treeset {

Word Substitution::apply(const Word& w) const {
  std::vector<int32_t> out;
  for (int32_t x : w) {
    const Word& img = images[static_cast<size_t>(x)];
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

Word fixed_point_prefix(const Substitution& s, int32_t seed, size_t min_len) {
  const Word& img = s.images[static_cast<size_t>(seed)];
  if (img.size() < 2 || img[0] != seed) {
    throw NotProlongable("substitution is not prolongable at " +
                         s.alphabet.symbol(seed));
  }
  Word w(std::vector<int32_t>{seed});
  while (w.size() < min_len) {
    w = s.apply(w);
  }
  return w;
}

Word block_decode(const Word& w, int k, const Alphabet& names,
                  const std::optional<BlockTable>& table) {
  if (k <= 0) throw std::invalid_argument("block length must be positive");
  if (w.size() < static_cast<size_t>(k)) {
    throw std::invalid_argument("word shorter than one block");
  }
  BlockTable assignment;
  if (table) assignment = *table;
  std::vector<int32_t> out;
  for (size_t pos = 0; pos + static_cast<size_t>(k) <= w.size();
       pos += static_cast<size_t>(k)) {
    Word block = w.subword(pos, static_cast<size_t>(k));
    auto it = assignment.find(block);
    if (it == assignment.end()) {
      if (table) {
        throw TooManyBlocks("block " + std::to_string(pos) +
                            " missing from the explicit block table");
      }
      int next = static_cast<int>(assignment.size());
      if (next >= names.size()) {
        throw TooManyBlocks("more distinct blocks than names");
      }
      it = assignment.emplace(std::move(block), next).first;
    }
    out.push_back(it->second);
  }
  return Word(std::move(out));
}

FactorSet factor_set_from_prefix(const Word& p, int max_len, const Alphabet& a,
                                 std::string source_tag) {
  return FactorSet::from_prefix(p, max_len, a, std::move(source_tag));
}

Substitution fibonacci_substitution() {
  Alphabet a = Alphabet::from_letters("ab");
  return Substitution{a, {parse_word("ab", a), parse_word("a", a)}};
}

Substitution tribonacci_substitution() {
  Alphabet a = Alphabet::from_letters("abc");
  return Substitution{
      a, {parse_word("ab", a), parse_word("ac", a), parse_word("a", a)}};
}

Substitution chacon_substitution() {
  Alphabet a = Alphabet::from_letters("abc");
  return Substitution{
      a, {parse_word("aabc", a), parse_word("bc", a), parse_word("abc", a)}};
}

namespace {

Substitution parse_inline_substitution(const std::string& body, int32_t* seed) {
  // body looks like "a=ab,b=a@a"
  auto at = body.rfind('@');
  if (at == std::string::npos) {
    throw std::invalid_argument("inline substitution needs @seed");
  }
  std::string rules = body.substr(0, at);
  std::string seed_sym = body.substr(at + 1);
  std::vector<std::string> symbols;
  std::vector<std::string> image_texts;
  std::stringstream ss(rules);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("bad substitution rule: " + item);
    }
    symbols.push_back(item.substr(0, eq));
    image_texts.push_back(item.substr(eq + 1));
  }
  Alphabet a{symbols};
  std::vector<Word> images;
  for (const auto& text : image_texts) images.push_back(parse_word(text, a));
  int s = a.index(seed_sym);
  if (s < 0) throw std::invalid_argument("seed symbol not in alphabet");
  *seed = s;
  return Substitution{a, images};
}

Word read_literal_word(const std::string& path, Alphabet* out_alphabet) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string content;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') content.push_back(c);
    }
  }
  if (content.empty()) throw std::runtime_error("empty word file: " + path);
  std::string letters;
  for (char c : content) {
    if (letters.find(c) == std::string::npos) letters.push_back(c);
  }
  std::sort(letters.begin(), letters.end());
  *out_alphabet = Alphabet::from_letters(letters);
  return parse_word(content, *out_alphabet);
}

}  // namespace

Source Source::parse(const std::string& spec) {
  Source src;
  src.name_ = spec;
  if (spec == "fib") {
    src.kind_ = Kind::Substitution;
    src.subst_ = fibonacci_substitution();
  } else if (spec == "trib") {
    src.kind_ = Kind::Substitution;
    src.subst_ = tribonacci_substitution();
  } else if (spec == "chacon") {
    src.kind_ = Kind::Substitution;
    src.subst_ = chacon_substitution();
  } else if (spec == "fib2") {
    src.kind_ = Kind::FibonacciBlock2;
    src.alphabet_ = Alphabet::from_letters("uvw");
    return src;
  } else if (spec.rfind("subst:", 0) == 0) {
    src.kind_ = Kind::Substitution;
    src.subst_ = parse_inline_substitution(spec.substr(6), &src.seed_);
  } else if (spec.rfind("file:", 0) == 0) {
    src.kind_ = Kind::Literal;
    src.literal_ = read_literal_word(spec.substr(5), &src.alphabet_);
    return src;
  } else {
    throw std::invalid_argument("unknown source specifier: " + spec);
  }
  src.alphabet_ = src.subst_.alphabet;
  return src;
}

Word Source::prefix(size_t min_len) const {
  switch (kind_) {
    case Kind::Substitution:
      return fixed_point_prefix(subst_, seed_, min_len);
    case Kind::FibonacciBlock2: {
      Substitution fib = fibonacci_substitution();
      Word base = fixed_point_prefix(fib, 0, 2 * min_len);
      // Fixed block naming: u = aa, v = ab, w = ba.
      BlockTable table;
      table.emplace(parse_word("aa", fib.alphabet), 0);
      table.emplace(parse_word("ab", fib.alphabet), 1);
      table.emplace(parse_word("ba", fib.alphabet), 2);
      return block_decode(base, 2, alphabet_, table);
    }
    case Kind::Literal:
      return literal_;
  }
  throw std::logic_error("unreachable");
}

FactorSet Source::factor_set(int max_len, size_t prefix_len) const {
  return factor_set_from_prefix(prefix(prefix_len), max_len, alphabet_, name_);
}

}  // namespace treeset
