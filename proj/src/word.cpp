#include "treeset/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace treeset {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must have at least one symbol");
  }
  for (size_t i = 0; i < symbols_.size(); ++i) {
    for (size_t j = i + 1; j < symbols_.size(); ++j) {
      if (symbols_[i] == symbols_[j]) {
        throw std::invalid_argument("alphabet symbols must be distinct");
      }
    }
  }
}

Alphabet Alphabet::from_letters(std::string_view letters) {
  std::vector<std::string> symbols;
  symbols.reserve(letters.size());
  for (char c : letters) {
    symbols.emplace_back(1, c);
  }
  return Alphabet(std::move(symbols));
}

int Alphabet::index(std::string_view s) const {
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == s) return static_cast<int>(i);
  }
  return -1;
}

Word Word::prefix(size_t n) const {
  return Word(std::vector<int32_t>(letters_.begin(), letters_.begin() + static_cast<long>(n)));
}

Word Word::suffix(size_t n) const {
  return Word(std::vector<int32_t>(letters_.end() - static_cast<long>(n), letters_.end()));
}

Word Word::subword(size_t pos, size_t len) const {
  auto first = letters_.begin() + static_cast<long>(pos);
  return Word(std::vector<int32_t>(first, first + static_cast<long>(len)));
}

Word Word::reversed() const {
  std::vector<int32_t> rev(letters_.rbegin(), letters_.rend());
  return Word(std::move(rev));
}

bool Word::starts_with(const Word& w) const {
  if (w.size() > size()) return false;
  return std::equal(w.letters_.begin(), w.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& w) const {
  if (w.size() > size()) return false;
  return std::equal(w.letters_.rbegin(), w.letters_.rend(), letters_.rbegin());
}

Word Word::operator+(const Word& other) const {
  std::vector<int32_t> out;
  out.reserve(size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::appended(int32_t letter) const {
  std::vector<int32_t> out(letters_);
  out.push_back(letter);
  return Word(std::move(out));
}

Word Word::prepended(int32_t letter) const {
  std::vector<int32_t> out;
  out.reserve(size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (int32_t x : w) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_word(const Word& w, const Alphabet& a) {
  if (w.empty()) return "ε";
  std::string out;
  for (int32_t x : w) out += a.symbol(x);
  return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
  if (text.empty() || text == "ε") return Word();
  std::vector<int32_t> letters;
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
      throw std::runtime_error("cannot parse word: unknown symbol at \"" +
                               std::string(text.substr(pos)) + "\"");
    }
    letters.push_back(best);
    pos += best_len;
  }
  return Word(std::move(letters));
}

std::vector<size_t> occurrences(const Word& haystack, const Word& needle) {
  std::vector<size_t> out;
  if (needle.size() > haystack.size()) return out;
  for (size_t p = 0; p + needle.size() <= haystack.size(); ++p) {
    bool hit = true;
    for (size_t i = 0; i < needle.size(); ++i) {
      if (haystack[p + i] != needle[i]) {
        hit = false;
        break;
      }
    }
    if (hit) out.push_back(p);
  }
  return out;
}

}  // namespace treeset
