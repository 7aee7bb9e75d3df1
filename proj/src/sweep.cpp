#include "treeset/sweep.hpp"

#include <sstream>

#include "treeset/freegroup.hpp"
#include "treeset/returns.hpp"

namespace treeset {

namespace {

TheoremRow sweep_one(const FactorSet& F, const Word& x) {
  TheoremRow row;
  row.x = x;
  try {
    ReturnSet r = first_return_words(F, x);
    row.return_count = static_cast<int>(r.words.size());
    std::vector<GroupElement> gens;
    for (const Word& w : r.words) gens.push_back(GroupElement::from_word(w));
    row.basis = is_basis_of_free_group(gens, F.alphabet());
    if (!x.empty() && is_bispecial(F, x)) {
      try {
        RauzyGraph g = rauzy_graph(F, static_cast<int>(x.size()));
        TypeClass t = classify_type(type_graph(g, F.alphabet()), x, F.alphabet());
        row.tag = t.tag;
        row.has_tag = true;
      } catch (const NoSpecialVertex&) {
      } catch (const HorizonExceeded&) {
      }
    }
  } catch (const HorizonExceeded& e) {
    row.status = TheoremRow::Status::Skip;
    row.note = e.what();
  }
  return row;
}

}  // namespace

std::vector<TheoremRow> theorem_sweep(const FactorSet& F, int max_len,
                                      ExecMode mode) {
  std::vector<Word> words = F.words_up_to(max_len);
  std::vector<TheoremRow> rows(words.size());
  const auto n = static_cast<long>(words.size());
  if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long i = 0; i < n; ++i) {
      rows[static_cast<size_t>(i)] = sweep_one(F, words[static_cast<size_t>(i)]);
    }
  } else {
    for (long i = 0; i < n; ++i) {
      rows[static_cast<size_t>(i)] = sweep_one(F, words[static_cast<size_t>(i)]);
    }
  }
  return rows;
}

std::string theorem_row_tsv(const TheoremRow& row, const Alphabet& a) {
  std::ostringstream out;
  out << format_word(row.x, a) << '\t';
  if (row.status == TheoremRow::Status::Skip) {
    out << "-\t-\t-\tSKIP " << row.note;
  } else {
    out << row.return_count << '\t' << (row.basis ? "yes" : "no") << '\t'
        << (row.has_tag ? type_tag_name(row.tag) : "-") << '\t'
        << (row.passes(a.size()) ? "ok" : "FAIL");
  }
  return out.str();
}

}  // namespace treeset
