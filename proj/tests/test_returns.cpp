#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "treeset/extension.hpp"
#include "treeset/generators.hpp"
#include "treeset/returns.hpp"

using namespace treeset;
using treeset::testing::W;
using treeset::testing::make_set;
using treeset::testing::make_word_list;

namespace {
const Alphabet kAB = Alphabet::from_letters("ab");
const Alphabet kABC = Alphabet::from_letters("abc");
const Alphabet kUVW = Alphabet::from_letters("uvw");

std::vector<std::string> names(const std::vector<Word>& ws, const Alphabet& a) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(format_word(w, a));
  return out;
}

Word long_prefix(const std::string& spec, size_t len) {
  return Source::parse(spec).prefix(len);
}
}  // namespace

TEST_CASE("return words of aa in Fibonacci") {
  FactorSet fib = make_set("fib", 24);
  std::vector<Word> gamma = return_words(fib, W("aa", kAB));
  // Every return word r satisfies: aa·r has aa as a suffix and exactly two
  // occurrences of aa (one at each end... for first returns).
  for (const Word& r : gamma) {
    Word xr = W("aa", kAB) + r;
    CHECK(xr.ends_with(W("aa", kAB)));
  }
  std::vector<Word> first = first_return_words(fib, W("aa", kAB)).words;
  CHECK(names(first, kAB) == std::vector<std::string>{"baa", "babaa"});
  // First returns are exactly the prefix-minimal elements of Γ.
  for (const Word& r : gamma) {
    CHECK(std::any_of(first.begin(), first.end(),
                      [&](const Word& f) { return r.starts_with(f); }));
  }
}

TEST_CASE("golden first return sets") {
  SUBCASE("Fibonacci, x = abaaba") {
    FactorSet fib = make_set("fib", 40);
    std::vector<Word> r = first_return_words(fib, W("abaaba", kAB)).words;
    CHECK(names(r, kAB) == std::vector<std::string>{"aba", "baaba"});
  }
  SUBCASE("block-coded Fibonacci, x = v") {
    FactorSet fib2 = make_set("fib2", 24);
    std::vector<Word> r = first_return_words(fib2, W("v", kUVW)).words;
    CHECK(names(r, kUVW) == std::vector<std::string>{"v", "uwv", "uwwv"});
  }
  SUBCASE("block-coded Fibonacci, x = wv") {
    FactorSet fib2 = make_set("fib2", 32);
    std::vector<Word> r = first_return_words(fib2, W("wv", kUVW)).words;
    CHECK(names(r, kUVW) ==
          std::vector<std::string>{"uwwv", "vuwv", "vuwwv"});
  }
  SUBCASE("block-coded Fibonacci, x = wvvuw") {
    FactorSet fib2 = make_set("fib2", 64);
    std::vector<Word> r = first_return_words(fib2, W("wvvuw", kUVW)).words;
    CHECK(names(r, kUVW) ==
          std::vector<std::string>{"vvuw", "wvuwwvvuw", "wvuwwvuwwvvuw"});
  }
}

TEST_CASE("the prefix-scanning oracle") {
  SUBCASE("agrees with the set computation on Fibonacci aa") {
    Word p = long_prefix("fib", 500);
    std::vector<Word> oracle = first_return_words_oracle(p, W("aa", kAB));
    CHECK(names(oracle, kAB) == std::vector<std::string>{"baa", "babaa"});
  }
  SUBCASE("tribonacci a has three returns") {
    Word p = long_prefix("trib", 2000);
    std::vector<Word> oracle = first_return_words_oracle(p, W("a", kABC));
    CHECK(oracle.size() == 3);
  }
  SUBCASE("absent word throws") {
    Word p = long_prefix("fib", 200);
    CHECK_THROWS_AS(first_return_words_oracle(p, W("bb", kAB)), NoOccurrence);
  }
}

TEST_CASE("return sets are suffix-anchored prefix codes") {
  FactorSet trib = make_set("trib", 32);
  for (const Word& x : trib.words_up_to(3)) {
    if (x.empty()) continue;
    ReturnSet r = first_return_words(trib, x);
    WordSet as_set(r.words.begin(), r.words.end());
    CHECK(is_prefix_code(as_set));
    for (const Word& w : r.words) {
      CHECK((x + w).ends_with(x));
    }
  }
}

TEST_CASE("unioccurrence") {
  CHECK(is_unioccurrent(W("aa", kAB), W("baab", kAB)));
  CHECK_FALSE(is_unioccurrent(W("a", kAB), W("aba", kAB)));
  CHECK_FALSE(is_unioccurrent(W("aa", kAB), W("bb", kAB)));
}

TEST_CASE("shortest bispecial extension") {
  FactorSet fib = make_set("fib", 24);
  SUBCASE("aa extends to abaaba") {
    BispecialExtension e = shortest_bispecial_extension(fib, W("aa", kAB));
    CHECK(format_word(e.u, kAB) == "ab");
    CHECK(format_word(e.v, kAB) == "ba");
    CHECK(format_word(e.y, kAB) == "abaaba");
  }
  SUBCASE("a bispecial word is its own extension") {
    BispecialExtension e = shortest_bispecial_extension(fib, W("abaaba", kAB));
    CHECK(e.u.empty());
    CHECK(e.v.empty());
    CHECK(e.y == W("abaaba", kAB));
  }
  SUBCASE("minimality, checked exhaustively on tribonacci") {
    FactorSet trib = make_set("trib", 36);
    for (const Word& x : trib.words_up_to(3)) {
      BispecialExtension e = shortest_bispecial_extension(trib, x);
      REQUIRE(is_bispecial(trib, e.y));
      CHECK(e.y == e.u + x + e.v);
      // No strictly shorter bispecial word contains x: any occurrence would
      // split off a shorter admissible (u, v).
      if (e.y.empty()) continue;
      for (const Word& y : trib.words_up_to(static_cast<int>(e.y.size()) - 1)) {
        if (!is_bispecial(trib, y)) continue;
        CHECK(occurrences(y, x).empty());
      }
    }
  }
  SUBCASE("periodic sets are detected") {
    WordSet members;
    for (const char* s : {"", "a", "b", "ab", "ba", "aba", "bab", "abab",
                          "baba", "ababa", "babab"}) {
      members.insert(W(s, kAB));
    }
    FactorSet periodic(kAB, 5, members, "periodic");
    CHECK_THROWS_AS(shortest_bispecial_extension(periodic, W("ab", kAB)),
                    PeriodicSet);
  }
}

TEST_CASE("tiny horizons raise HorizonExceeded") {
  FactorSet fib = make_set("fib", 4);
  CHECK_THROWS_AS(first_return_words(fib, W("aa", kAB)), HorizonExceeded);
  FactorSet fib6 = make_set("fib", 6);
  CHECK_THROWS_AS(shortest_bispecial_extension(fib6, W("abaab", kAB)),
                  HorizonExceeded);
}

TEST_CASE("conjugacy with the bispecial extension") {
  FactorSet fib = make_set("fib", 40);
  CHECK(conjugacy_check(fib, W("aa", kAB)));
  FactorSet trib = make_set("trib", 40);
  CHECK(conjugacy_check(trib, W("ab", kABC)));
  FactorSet fib2 = make_set("fib2", 40);
  for (const Word& x : fib2.words_up_to(2)) {
    if (x.empty()) continue;
    CAPTURE(format_word(x, kUVW));
    CHECK(conjugacy_check(fib2, x));
  }
}

namespace {
TypeClass classified(const FactorSet& F, const Word& bispecial) {
  LabeledGraph t =
      type_graph(rauzy_graph(F, static_cast<int>(bispecial.size())),
                 F.alphabet());
  return classify_type(t, bispecial, F.alphabet());
}
}  // namespace

TEST_CASE("infinite-case return shape") {
  FactorSet fib2 = make_set("fib2", 64);
  SUBCASE("order 1, x = v: n = 0") {
    TypeClass c = classified(fib2, W("v", kUVW));
    REQUIRE(c.tag == TypeTag::Infinite1);
    auto n = infinite_case_shape_check(fib2, W("v", kUVW), c);
    REQUIRE(n.has_value());
    CHECK(*n == 0);
  }
  SUBCASE("order 5, x = wvvuw: n = 1") {
    TypeClass c = classified(fib2, W("wvvuw", kUVW));
    REQUIRE(c.tag == TypeTag::Infinite1);
    auto n = infinite_case_shape_check(fib2, W("wvvuw", kUVW), c);
    REQUIRE(n.has_value());
    CHECK(*n == 1);
  }
}

TEST_CASE("finite-case return table") {
  FactorSet fib2 = make_set("fib2", 64);
  SUBCASE("case 6 at wv") {
    TypeClass c = classified(fib2, W("wv", kUVW));
    REQUIRE(c.tag == TypeTag::Finite6);
    CHECK(finite_case_table_check(fib2, W("wv", kUVW), c));
  }
  SUBCASE("case 5 at vuw") {
    TypeClass c = classified(fib2, W("vuw", kUVW));
    REQUIRE(c.tag == TypeTag::Finite5);
    CHECK(finite_case_table_check(fib2, W("vuw", kUVW), c));
  }
}

TEST_CASE("set computation matches the oracle everywhere") {
  for (const char* spec : {"fib", "trib", "fib2", "chacon"}) {
    FactorSet F = make_set(spec, 32);
    Word p = Source::parse(spec).prefix(20000);
    for (const Word& x : F.words_up_to(3)) {
      if (x.empty()) continue;
      CAPTURE(spec);
      CAPTURE(format_word(x, F.alphabet()));
      std::vector<Word> fast;
      try {
        fast = first_return_words(F, x).words;
      } catch (const HorizonExceeded&) {
        continue;
      }
      std::vector<Word> slow = first_return_words_oracle(p, x);
      REQUIRE(fast == slow);
    }
  }
}
