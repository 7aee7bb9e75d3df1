#include "treeset/factor_set.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace treeset {

FactorSet::FactorSet(Alphabet alphabet, int max_len, WordSet members,
                     std::string source_tag)
    : alphabet_(std::move(alphabet)),
      max_len_(max_len),
      source_tag_(std::move(source_tag)),
      members_(std::move(members)) {
  if (max_len_ < 0) throw std::invalid_argument("max_len must be nonnegative");
  members_.insert(Word());
  for (const Word& w : members_) {
    if (static_cast<int>(w.size()) > max_len_) {
      throw std::invalid_argument("member longer than the horizon");
    }
    // Checking both one-shorter prefix and suffix gives full factorial
    // closure by induction.
    if (!w.empty()) {
      if (!members_.count(w.prefix(w.size() - 1)) ||
          !members_.count(w.suffix(w.size() - 1))) {
        throw std::invalid_argument("member set is not factorial");
      }
    }
  }
  by_length_.resize(static_cast<size_t>(max_len_) + 1);
  for (const Word& w : members_) {
    by_length_[w.size()].push_back(w);
  }
  for (auto& level : by_length_) {
    std::sort(level.begin(), level.end(), shortlex_less);
  }
}

FactorSet FactorSet::from_prefix(const Word& p, int max_len, Alphabet alphabet,
                                 std::string source_tag) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  if (p.size() < 4 * static_cast<size_t>(max_len)) {
    throw StabilizationFailed("prefix of length " + std::to_string(p.size()) +
                              " is too short for horizon " +
                              std::to_string(max_len));
  }
  const size_t half = p.size() / 2;
  // seen_early marks factors that already occur in the half-length prefix;
  // stabilization demands that every factor does.
  std::unordered_map<Word, bool, WordHash> seen;
  for (size_t pos = 0; pos < p.size(); ++pos) {
    const size_t max_here = std::min<size_t>(static_cast<size_t>(max_len), p.size() - pos);
    for (size_t len = 1; len <= max_here; ++len) {
      const bool early = pos + len <= half;
      auto [it, inserted] = seen.emplace(p.subword(pos, len), early);
      if (!inserted && early) it->second = true;
    }
  }
  WordSet members;
  members.reserve(seen.size() + 1);
  for (auto& [w, early] : seen) {
    if (!early) {
      throw StabilizationFailed(
          "factor sets of the prefix and its half disagree (horizon " +
          std::to_string(max_len) + "); prefix too short");
    }
    members.insert(w);
  }
  members.insert(Word());
  return FactorSet(std::move(alphabet), max_len, std::move(members),
                   std::move(source_tag));
}

bool FactorSet::contains(const Word& w) const {
  if (static_cast<int>(w.size()) > max_len_) {
    throw HorizonExceeded("membership query of length " +
                          std::to_string(w.size()) + " beyond horizon " +
                          std::to_string(max_len_));
  }
  return members_.count(w) > 0;
}

const std::vector<Word>& FactorSet::words_of_length(int n) const {
  if (n < 0 || n > max_len_) {
    throw HorizonExceeded("length " + std::to_string(n) + " beyond horizon " +
                          std::to_string(max_len_));
  }
  return by_length_[static_cast<size_t>(n)];
}

std::vector<Word> FactorSet::words_up_to(int m) const {
  if (m > max_len_) {
    throw HorizonExceeded("length " + std::to_string(m) + " beyond horizon " +
                          std::to_string(max_len_));
  }
  std::vector<Word> out;
  for (int n = 0; n <= m; ++n) {
    const auto& level = words_of_length(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

WordSet residual(const Word& u, const WordSet& X) {
  WordSet out;
  for (const Word& x : X) {
    if (x.starts_with(u)) out.insert(x.suffix(x.size() - u.size()));
  }
  return out;
}

bool is_factorial(const WordSet& S) {
  for (const Word& w : S) {
    if (w.empty()) continue;
    if (!S.count(w.prefix(w.size() - 1)) || !S.count(w.suffix(w.size() - 1))) {
      return false;
    }
  }
  return S.count(Word()) > 0 || S.empty();
}

namespace {

bool code_check(const WordSet& S, bool prefix_side) {
  for (const Word& w : S) {
    if (w.empty()) throw EmptyWordInCode();
  }
  for (const Word& a : S) {
    for (const Word& b : S) {
      if (a == b || a.size() >= b.size()) continue;
      if (prefix_side ? b.starts_with(a) : b.ends_with(a)) return false;
    }
  }
  return true;
}

bool prefix_comparable(const Word& a, const Word& b) {
  return a.size() <= b.size() ? b.starts_with(a) : a.starts_with(b);
}

bool suffix_comparable(const Word& a, const Word& b) {
  return a.size() <= b.size() ? b.ends_with(a) : a.ends_with(b);
}

}  // namespace

bool is_prefix_code(const WordSet& V) { return code_check(V, true); }

bool is_suffix_code(const WordSet& U) { return code_check(U, false); }

bool is_F_maximal_prefix_code(const WordSet& V, const FactorSet& F) {
  if (!is_prefix_code(V)) return false;
  size_t longest = 0;
  for (const Word& v : V) longest = std::max(longest, v.size());
  if (longest > static_cast<size_t>(F.max_len())) {
    throw HorizonExceeded("code contains words beyond the horizon");
  }
  for (int n = 1; n <= static_cast<int>(longest); ++n) {
    for (const Word& w : F.words_of_length(n)) {
      bool comparable = false;
      for (const Word& v : V) {
        if (prefix_comparable(w, v)) {
          comparable = true;
          break;
        }
      }
      if (!comparable) return false;
    }
  }
  return true;
}

bool is_F_maximal_suffix_code(const WordSet& U, const FactorSet& F) {
  if (!is_suffix_code(U)) return false;
  size_t longest = 0;
  for (const Word& u : U) longest = std::max(longest, u.size());
  if (longest > static_cast<size_t>(F.max_len())) {
    throw HorizonExceeded("code contains words beyond the horizon");
  }
  for (int n = 1; n <= static_cast<int>(longest); ++n) {
    for (const Word& w : F.words_of_length(n)) {
      bool comparable = false;
      for (const Word& u : U) {
        if (suffix_comparable(w, u)) {
          comparable = true;
          break;
        }
      }
      if (!comparable) return false;
    }
  }
  return true;
}

std::vector<Word> sorted_words(const WordSet& S) {
  std::vector<Word> out(S.begin(), S.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

WordSet read_word_set(std::istream& in, const Alphabet& a) {
  WordSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.pop_back();
    }
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    out.insert(parse_word(std::string_view(line).substr(start), a));
  }
  return out;
}

void write_word_set(std::ostream& out, const WordSet& S, const Alphabet& a) {
  for (const Word& w : sorted_words(S)) {
    out << format_word(w, a) << '\n';
  }
}

}  // namespace treeset
