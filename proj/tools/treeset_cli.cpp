// Command-line front end: sources in, reports / TSV / DOT out.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeset/extension.hpp"
#include "treeset/freegroup.hpp"
#include "treeset/generators.hpp"
#include "treeset/rauzy.hpp"
#include "treeset/returns.hpp"
#include "treeset/sweep.hpp"

using namespace treeset;

namespace {

struct RunConfig {
  std::string spec;
  int max_len = 6;
  int order = -1;
  int horizon = -1;  // -1: derive 4m + 8
  std::string emit_dot;
  std::string gens_file;
  std::string word;
  bool oracle = false;
  uint64_t seed = 0;

  int effective_horizon() const {
    if (horizon >= 0) return horizon;
    int depth = std::max(max_len, order < 0 ? 0 : order);
    return 4 * depth + 8;
  }
};

size_t prefix_len_for(int horizon) {
  if (const char* env = std::getenv("TREESET_PREFIX_LEN")) {
    return std::stoul(env);
  }
  return std::max<size_t>(20000, 64 * static_cast<size_t>(horizon));
}

FactorSet load(const RunConfig& cfg) {
  int L = cfg.effective_horizon();
  return Source::parse(cfg.spec).factor_set(L, prefix_len_for(L));
}

void write_dot(const std::string& dir, const std::string& name,
               const std::string& dot) {
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name);
  out << dot;
}

int cmd_check_tree(const RunConfig& cfg) {
  FactorSet F = load(cfg);
  TreeReport r = check_tree_condition(F, cfg.max_len);
  if (r.ok) {
    std::cout << "tree condition holds for |w| <= " << cfg.max_len << "\n";
    return 0;
  }
  std::cout << "tree condition fails at w = "
            << format_word(r.counterexample, F.alphabet()) << "\n";
  std::string dot = to_dot(r.graph, F.alphabet());
  if (!cfg.emit_dot.empty()) {
    write_dot(cfg.emit_dot, "counterexample.dot", dot);
  } else {
    std::cout << dot;
  }
  return 1;
}

int cmd_verify_theorem(const RunConfig& cfg) {
  FactorSet F = load(cfg);
  std::vector<TheoremRow> rows =
      theorem_sweep(F, cfg.max_len, ExecMode::Parallel);
  std::cout << "word\treturns\tbasis\ttype\tstatus\n";
  bool all_ok = true;
  for (const TheoremRow& row : rows) {
    std::cout << theorem_row_tsv(row, F.alphabet()) << "\n";
    all_ok = all_ok && row.passes(F.alphabet().size());
  }
  return all_ok ? 0 : 1;
}

int cmd_rauzy(const RunConfig& cfg) {
  FactorSet F = load(cfg);
  RauzyGraph g = rauzy_graph(F, cfg.order);
  std::cout << "order " << g.order << ": " << g.vertices.size()
            << " vertices, " << g.edges.size() << " edges, "
            << (is_strongly_connected(g) ? "strongly connected"
                                         : "not strongly connected")
            << "\n";
  for (const auto& e : g.edges) {
    std::cout << format_word(g.vertices[static_cast<size_t>(e.src)], F.alphabet())
              << " -" << F.alphabet().symbol(e.letter) << "-> "
              << format_word(g.vertices[static_cast<size_t>(e.tgt)], F.alphabet())
              << "\n";
  }
  if (!cfg.emit_dot.empty()) {
    write_dot(cfg.emit_dot, "rauzy_" + std::to_string(cfg.order) + ".dot",
              to_dot(g, F.alphabet()));
  }
  return 0;
}

int cmd_fold(const RunConfig& cfg) {
  std::vector<GroupElement> gens;
  Alphabet a;
  if (!cfg.gens_file.empty()) {
    a = Source::parse(cfg.spec).alphabet();
    std::ifstream in(cfg.gens_file);
    if (!in) {
      std::cerr << "cannot open " << cfg.gens_file << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      gens.push_back(parse_group_element(line, a));
    }
  } else {
    FactorSet F = load(cfg);
    a = F.alphabet();
    gens = group_of_graph(to_labeled(rauzy_graph(F, cfg.order), a), 0);
  }
  StallingsGraph sub = subgroup_graph(gens, a, cfg.seed);
  bool basis = is_basis_of_free_group(gens, a);
  std::cout << "basis: " << (basis ? "yes" : "no") << " rank: " << rank(sub)
            << "\n";
  if (!cfg.emit_dot.empty()) {
    std::string name = cfg.order >= 0
                           ? "folded_" + std::to_string(cfg.order) + ".dot"
                           : "folded.dot";
    write_dot(cfg.emit_dot, name, to_dot(sub, a));
  }
  return basis ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg) {
  FactorSet F = load(cfg);
  RauzyGraph g = rauzy_graph(F, cfg.order);
  LabeledGraph t = type_graph(g, F.alphabet());
  if (!cfg.emit_dot.empty()) {
    write_dot(cfg.emit_dot, "type_" + std::to_string(cfg.order) + ".dot",
              to_dot(t, F.alphabet()));
  }
  bool any = false, all_known = true;
  for (const Word& w : F.words_of_length(cfg.order)) {
    if (!is_bispecial(F, w)) continue;
    any = true;
    TypeClass c = classify_type(t, w, F.alphabet());
    std::cout << type_tag_name(c.tag)
              << " bispecial=" << format_word(w, F.alphabet()) << "\n";
    all_known = all_known && c.tag != TypeTag::Other;
  }
  if (!any) {
    std::cout << "no bispecial word of length " << cfg.order << "\n";
    return 1;
  }
  return all_known ? 0 : 1;
}

int cmd_returns(const RunConfig& cfg) {
  FactorSet F = load(cfg);
  Word x = parse_word(cfg.word, F.alphabet());
  ReturnSet r = first_return_words(F, x);
  for (const Word& w : r.words) {
    std::cout << format_word(w, F.alphabet()) << "\n";
  }
  if (cfg.oracle) {
    Word p = Source::parse(cfg.spec)
                 .prefix(prefix_len_for(cfg.effective_horizon()));
    if (first_return_words_oracle(p, x) != r.words) {
      std::cerr << "oracle disagreement\n";
      return 1;
    }
    std::cout << "# oracle agrees\n";
  }
  return 0;
}

int cmd_complexity(const RunConfig& cfg) {
  FactorSet F = load(cfg);
  std::cout << "n\tp(n)\n";
  for (int n = 0; n <= cfg.max_len; ++n) {
    std::cout << n << "\t" << complexity(F, n) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyses of factor sets: extension graphs, Rauzy graphs, "
               "return words, free-group bases"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_order) {
    sub->add_option("source", cfg.spec,
                    "fib | trib | chacon | fib2 | subst:a=ab,b=a@a | file:PATH")
        ->required();
    sub->add_option("--horizon", cfg.horizon,
                    "factor-set horizon (default 4*depth+8)");
    sub->add_option("--emit-dot", cfg.emit_dot, "directory for DOT output");
    sub->add_option("--seed", cfg.seed, "seed for order-randomized folding");
    if (needs_order) {
      sub->add_option("-n,--order", cfg.order, "graph order")->required();
    } else {
      sub->add_option("-m,--max-len", cfg.max_len, "maximum word length");
    }
  };

  CLI::App* check = app.add_subcommand("check-tree",
                                       "verify extension graphs are trees");
  add_common(check, false);
  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "per-word return-set basis table (TSV)");
  add_common(verify, false);
  CLI::App* rauzy = app.add_subcommand("rauzy", "print a Rauzy graph");
  add_common(rauzy, true);
  CLI::App* fold =
      app.add_subcommand("fold", "fold a Rauzy graph or a generator file");
  add_common(fold, false);
  fold->add_option("-n,--order", cfg.order, "graph order");
  fold->add_option("--gens", cfg.gens_file,
                   "file of group elements, one per line (' = inverse)");
  CLI::App* classify =
      app.add_subcommand("classify", "type of the bispecial words at order n");
  add_common(classify, true);
  CLI::App* returns =
      app.add_subcommand("returns", "first return words of a factor");
  add_common(returns, false);
  returns->add_option("word", cfg.word, "the factor x")->required();
  returns->add_flag("--oracle", cfg.oracle,
                    "cross-check against the prefix-scanning oracle");
  CLI::App* comp = app.add_subcommand("complexity", "factor counts p(n)");
  add_common(comp, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_tree(cfg);
    if (verify->parsed()) return cmd_verify_theorem(cfg);
    if (rauzy->parsed()) return cmd_rauzy(cfg);
    if (fold->parsed()) {
      if (cfg.order < 0 && cfg.gens_file.empty()) {
        std::cerr << "fold needs -n or --gens\n";
        return 2;
      }
      return cmd_fold(cfg);
    }
    if (classify->parsed()) return cmd_classify(cfg);
    if (returns->parsed()) return cmd_returns(cfg);
    if (comp->parsed()) return cmd_complexity(cfg);
  } catch (const HorizonExceeded& e) {
    std::cerr << "horizon too small: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
