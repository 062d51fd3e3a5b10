// numsys: decide whether a linear numeration system has a regular numeration language.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "numsys/io.hpp"

using namespace numsys;

namespace {

constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Regular: return 0;
    case Verdict::NotRegular: return 1;
    case Verdict::Unknown: return 2;
  }
  return 2;
}

struct BudgetFlags {
  long expansion_steps = -1;
  long max_height_bits = -1;
  long p_bound = -1;
  long fit_window = -1;
  bool exhaustive = false;

  void attach(CLI::App* app) {
    app->add_option("--expansion-steps", expansion_steps, "Step budget for each expansion of 1");
    app->add_option("--max-height-bits", max_height_bits, "Stop an expansion when remainders grow past this size");
    app->add_option("--p-bound", p_bound, "Upper bound on the period p of the alternate base");
    app->add_option("--fit-window", fit_window, "Terms used to fit minimal polynomials");
    app->add_flag("--exhaustive", exhaustive, "Decide every vertex even after a negative one");
  }
  // Flags override budgets embedded in the document.
  void apply(AnalysisBudgets& b) const {
    if (expansion_steps >= 0) b.expansion.steps = static_cast<std::size_t>(expansion_steps);
    if (max_height_bits >= 0) b.expansion.max_height_bits = static_cast<std::size_t>(max_height_bits);
    if (p_bound >= 0) b.p_bound = static_cast<unsigned long>(p_bound);
    if (fit_window >= 0) b.fit_window = static_cast<std::size_t>(fit_window);
    if (exhaustive) b.exhaustive = true;
  }
};

SystemSpec load(const std::string& path, const BudgetFlags& flags) {
  SystemSpec spec = parse_system(read_file(path));
  flags.apply(spec.budgets);
  return spec;
}

std::string word_text(const FiniteWord& w) { return w.display(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of numeration languages of linear numeration systems"};
  app.require_subcommand(1);
  std::string file;
  BudgetFlags flags;
  unsigned digits = 12;
  std::size_t max_states = kDefaultStateLimit;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full decision procedure; exit 0 REGULAR, 1 NOT_REGULAR, 2 UNKNOWN");
  bool as_json = false, with_automaton = false;
  analyze_cmd->add_option("system", file, "System document (- for stdin)")->required();
  analyze_cmd->add_flag("--json", as_json, "Machine-readable report");
  analyze_cmd->add_flag("--automaton", with_automaton, "Also compile the DFA when REGULAR");
  analyze_cmd->add_option("--max-states", max_states, "Bound on each subset construction while compiling");
  analyze_cmd->add_option("--digits", digits, "Decimals for algebraic numbers");
  flags.attach(analyze_cmd);

  auto* terms_cmd = app.add_subcommand("terms", "Print U_0 .. U_{n-1}");
  std::size_t count = 20;
  terms_cmd->add_option("system", file)->required();
  terms_cmd->add_option("-n,--count", count, "Number of terms");

  auto* rep_cmd = app.add_subcommand("rep", "Greedy representation of a natural number");
  std::string number;
  rep_cmd->add_option("system", file)->required();
  rep_cmd->add_option("x", number, "Natural number")->required();

  auto* max_cmd = app.add_subcommand("maxwords", "Maximal words rep(U_n - 1)");
  std::size_t max_len = 15;
  max_cmd->add_option("system", file)->required();
  max_cmd->add_option("--max-len", max_len, "Largest length n");

  auto* base_cmd = app.add_subcommand("base", "Alternate base attached to the system");
  base_cmd->add_option("system", file)->required();
  base_cmd->add_option("--digits", digits, "Decimals");
  flags.attach(base_cmd);

  auto* exp_cmd = app.add_subcommand("expansions", "Greedy and quasi-greedy expansions of 1");
  exp_cmd->add_option("system", file)->required();
  flags.attach(exp_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "Successor graph of the expansions");
  bool dot = false;
  graph_cmd->add_option("system", file)->required();
  graph_cmd->add_flag("--dot", dot, "Graphviz output");
  flags.attach(graph_cmd);

  auto* auto_cmd = app.add_subcommand("automaton", "Compile the DFA of the numeration language");
  bool json_out = false, strip = false;
  auto_cmd->add_option("system", file)->required();
  auto_cmd->add_flag("--dot", dot, "Graphviz output");
  auto_cmd->add_flag("--json", json_out, "JSON output");
  auto_cmd->add_flag("--no-leading-zeros", strip, "Accept rep(N) only, without leading zeros");
  auto_cmd->add_option("--max-states", max_states, "Bound on each subset construction");
  flags.attach(auto_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the compiled DFA with greedy representations");
  std::size_t oracle_len = 12;
  oracle_cmd->add_option("system", file)->required();
  oracle_cmd->add_option("--maxlen", oracle_len, "Largest word length compared");
  oracle_cmd->add_option("--max-states", max_states, "Bound on each subset construction");
  flags.attach(oracle_cmd);

  auto* from_cmd = app.add_subcommand("from-maxwords", "Numeration system whose maximal words are given");
  from_cmd->add_option("document", file, "Maximal-words document (- for stdin)")->required();
  from_cmd->add_option("-n,--count", count, "Number of terms printed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*from_cmd) {
      SlenderDecomposition m = parse_max_words(read_file(file));
      CandidateSystem c = system_from_max_words(m);
      AnalysisBudgets none;
      std::cout << system_to_json(c.system, none);
      std::cerr << "validated on lengths up to " << c.validated_to << "\n";
      return 0;
    }

    SystemSpec spec = load(file, flags);
    const PositionalSystem& sys = spec.system;

    if (*terms_cmd) {
      for (std::size_t n = 0; n < count; ++n) std::cout << sys.term(n) << "\n";
      return 0;
    }
    if (*rep_cmd) {
      Integer x;
      if (number.empty() || number.find_first_not_of("0123456789") != std::string::npos || x.set_str(number, 10) != 0)
        throw InputError("x", "expected a natural number");
      std::cout << word_text(rep(sys, x)) << "\n";
      return 0;
    }
    if (*max_cmd) {
      for (std::size_t n = 0; n <= max_len; ++n)
        std::cout << n << "\t" << Integer(sys.term(n) - 1) << "\t" << word_text(max_word(sys, n)) << "\n";
      return 0;
    }
    if (*base_cmd) {
      BaseResult b = extract_base(sys, spec.budgets.p_bound);
      if (auto* f = std::get_if<BaseFailure>(&b)) {
        std::cout << to_string(f->kind) << ": " << f->reason << "\n";
        return f->kind == BaseFailureKind::NotRhoXiStructure ? 1 : 2;
      }
      const AlternateBase& base = std::get<AlternateBase>(b);
      std::cout << "p = " << base.p << "\n";
      std::cout << "minimal polynomial: " << algebra::to_string(base.minimal_polynomial) << "\n";
      if (base.field->degree() > 1)
        std::cout << "field: Q(t), t root of " << algebra::to_string(base.field->modulus()) << ", t = "
                  << decimal(FieldElement::generator(base.field), digits) << "\n";
      for (unsigned i = 0; i < base.p; ++i) {
        std::cout << "beta_" << i << " = " << base.betas[i].to_string() << " = " << decimal(base.betas[i], digits)
                  << "  coords [";
        auto cs = base.betas[i].coords();
        for (std::size_t k = 0; k < cs.size(); ++k) std::cout << (k ? ", " : "") << cs[k].get_str();
        std::cout << "]\n";
      }
      return 0;
    }

    AnalysisReport report = analyze(sys, spec.budgets);

    if (*exp_cmd) {
      if (!report.base) {
        std::cout << "no base: " << (report.base_failure ? report.base_failure->reason : "") << "\n";
        return verdict_code(report.overall);
      }
      std::cout << "i\td_i\td*_i\n";
      for (std::size_t i = 0; i < report.expansions.size(); ++i) {
        const auto& e = report.expansions[i];
        std::cout << i << "\t" << (e.resolved() ? e.word().str() : "? (" + e.note + ")") << "\t"
                  << (i < report.quasi_greedy.size() ? report.quasi_greedy[i].str() : "?") << "\n";
      }
      return 0;
    }
    if (*graph_cmd) {
      if (!report.graph) {
        std::cerr << "no graph: the base could not be extracted\n";
        return verdict_code(report.overall);
      }
      const SuccessorGraph& g = *report.graph;
      if (dot) {
        std::cout << "digraph G {\n";
        for (unsigned i = 0; i < g.p; ++i) std::cout << "  " << i << " [label=\"" << i << "\\n" << to_string(g.classes[i].category) << "\"];\n";
        for (auto [a, b] : g.edges())
          std::cout << "  " << a << " -> " << b << " [label=\"" << g.lengths[a] << "\"];\n";
        std::cout << "}\n";
      } else {
        for (auto [a, b] : g.edges()) std::cout << a << " -> " << b << "\n";
        for (unsigned i = 0; i < g.p; ++i) std::cout << i << ": " << to_string(g.classes[i].category) << "\n";
      }
      return 0;
    }

    if (*analyze_cmd) {
      if (with_automaton) attach_automaton(report, max_states);
      std::cout << (as_json ? render_json(report, digits) : render_text(report, digits));
      return verdict_code(report.overall);
    }

    // automaton, oracle-check
    if (report.overall != Verdict::Regular) {
      std::cerr << "verdict " << to_string(report.overall) << ": no automaton\n";
      return verdict_code(report.overall);
    }
    MaxWordsDecomposition m = decompose_max_words(sys, report);
    Dfa dfa = compile(m, sys, max_states);
    if (*auto_cmd) {
      if (strip) dfa = strip_leading_zeros(dfa);
      if (dot)
        std::cout << to_dot(dfa);
      else if (json_out)
        std::cout << to_json(dfa);
      else {
        std::cout << "states: " << dfa.size() << "\nalphabet: 0.." << dfa.alphabet - 1 << "\nmaximal words:";
        for (const auto& f : m.slender.finite) std::cout << " " << f.display();
        for (const auto& pc : m.slender.pieces)
          std::cout << " " << pc.x.display() << "(" << pc.y.display() << ")*" << (pc.z.empty() ? "" : pc.z.str());
        std::cout << "\n";
      }
      return 0;
    }
    if (*oracle_cmd) {
      std::string diff = diff_with_oracle(dfa, sys, oracle_len);
      if (diff.empty()) {
        std::cout << "agree up to length " << oracle_len << " (" << dfa.size() << " states)\n";
        return 0;
      }
      std::cout << "DIFFER " << diff << "\n";
      return kExitInternal;
    }
  } catch (const InputError& e) {
    std::cerr << "input error at " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidCandidate& e) {
    std::cerr << "invalid maximal words: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidSystem& e) {
    std::cerr << "invalid system: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotIncreasing& e) {
    std::cerr << "invalid system: " << e.what() << "\n";
    return kExitInput;
  } catch (const StateLimitExceeded& e) {
    std::cerr << "automaton not compiled: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
