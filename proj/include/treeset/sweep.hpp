#pragma once

#include <string>
#include <vector>

#include "treeset/extension.hpp"
#include "treeset/factor_set.hpp"
#include "treeset/rauzy.hpp"

namespace treeset {

// One row of the main-theorem sweep: for x in F, is R_F(x) a basis of the
// free group on the alphabet?
struct TheoremRow {
  enum class Status { Ok, Skip };
  Word x;
  int return_count = 0;
  bool basis = false;
  TypeTag tag = TypeTag::Other;
  bool has_tag = false;
  Status status = Status::Ok;
  std::string note;

  bool passes(int alphabet_size) const {
    return status == Status::Ok && return_count == alphabet_size && basis;
  }
};

// Rows for every x in F with |x| <= max_len, in shortlex order regardless of
// ExecMode. Per-word horizon failures become Skip rows, never aborts.
std::vector<TheoremRow> theorem_sweep(const FactorSet& F, int max_len,
                                      ExecMode mode = ExecMode::Serial);

std::string theorem_row_tsv(const TheoremRow& row, const Alphabet& a);

}  // namespace treeset
