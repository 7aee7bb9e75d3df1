#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "treeset/word.hpp"

namespace treeset {

struct SignedLetter {
  int32_t symbol;
  int sign;  // +1 or -1
  bool operator==(const SignedLetter&) const = default;
};

// A freely reduced element of the free group on an Alphabet.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity() { return GroupElement(); }
  // Reduces the raw sequence; cancellation is confluent so the result is
  // canonical.
  static GroupElement from_signed(std::vector<SignedLetter> raw);
  // Positive lift of a Word: every letter gets sign +1. This is the only
  // bridge between the residual u^{-1}X and the group inverse.
  static GroupElement from_word(const Word& w);

  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& other) const;

  bool is_identity() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const std::vector<SignedLetter>& letters() const { return letters_; }

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& other) const;

 private:
  std::vector<SignedLetter> letters_;
};

GroupElement reduce(std::vector<SignedLetter> raw);

// Rooted letter-labeled graph representing a finitely generated subgroup.
// Positive edges only; a generalized path may traverse them backwards.
struct StallingsGraph {
  int num_vertices = 0;
  std::vector<std::tuple<int, int32_t, int>> edges;
  int base = 0;
  bool folded = false;
};

// Bouquet of generator loops at the base, fully folded.
StallingsGraph subgroup_graph(const std::vector<GroupElement>& gens,
                              const Alphabet& a, uint64_t seed = 0);

// First Betti number of the core (hanging trees pruned, base kept).
int rank(const StallingsGraph& g);

// Does g trace a closed path at the base?
bool contains_element(const StallingsGraph& g, const GroupElement& e);

// |gens| = |A| and the folded subgroup graph is the rose on A.
bool is_basis_of_free_group(const std::vector<GroupElement>& gens,
                            const Alphabet& a);

std::string format(const GroupElement& e, const Alphabet& a);
// Letters with an optional ' suffix meaning inverse, e.g. "ab'a".
GroupElement parse_group_element(std::string_view text, const Alphabet& a);

std::string to_dot(const StallingsGraph& g, const Alphabet& a);

}  // namespace treeset
