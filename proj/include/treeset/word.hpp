#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treeset {

// An ordered finite list of distinct symbols. The order is total and fixed;
// it drives every canonical ordering downstream.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  // One single-character symbol per character of `letters`.
  static Alphabet from_letters(std::string_view letters);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int i) const { return symbols_[static_cast<size_t>(i)]; }
  // Index of `s`, or -1 if absent.
  int index(std::string_view s) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

// A finite sequence of symbol indices into some Alphabet. Words never store
// raw characters, so block-decoded alphabets are first-class.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int32_t> letters) : letters_(std::move(letters)) {}

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int32_t operator[](size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<int32_t>& letters() const { return letters_; }

  Word prefix(size_t n) const;
  Word suffix(size_t n) const;
  Word subword(size_t pos, size_t len) const;
  Word reversed() const;

  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;

  Word operator+(const Word& other) const;
  Word appended(int32_t letter) const;
  Word prepended(int32_t letter) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<int32_t> letters_;
};

struct WordHash {
  size_t operator()(const Word& w) const;
};

// Length first, then lexicographic by letter indices.
bool shortlex_less(const Word& a, const Word& b);

// Lexicographic on equal lengths is what shortlex gives; plain operator< on
// the letter vectors is deliberately not provided.

std::string format_word(const Word& w, const Alphabet& a);

// Greedy longest-match tokenization against the alphabet's symbols.
// Accepts "" and the literal "ε" as the empty word. Throws std::runtime_error
// when the text cannot be tokenized.
Word parse_word(std::string_view text, const Alphabet& a);

// All start positions of `needle` in `haystack` (overlapping allowed).
std::vector<size_t> occurrences(const Word& haystack, const Word& needle);

}  // namespace treeset
