#pragma once
// The per-vertex regularity criteria and the overall analysis of a system.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "numsys/altbase.hpp"
#include "numsys/delta.hpp"

namespace numsys {

struct Dfa;

enum class Verdict { Regular, NotRegular, Unknown };
std::string to_string(Verdict v);

struct Certificate {
  // "base-structure", "ultimately-zero", "periodic-delta", "cycle-sum", "drift-match", "prerequisite", "unresolved".
  std::string rule;
  // Infinite vertex: Δ_{i,q0,m0}; k is the multiplier making it ultimately zero (0 if none).
  std::size_t q0 = 0, m0 = 0;
  unsigned long k = 0;
  // Cycle / leads-to-cycle parameters.
  unsigned long M = 0, M_prime = 0;
  unsigned r = 0, s = 0;
  unsigned target = 0;  // NoSuccessor vertex reached, or the cycle vertex σ^s(i), or the cycle root
  long m_is = 0;        // m_{i,s}
  std::vector<Integer> constants;              // per-residue ultimate values of Δ_i (periodic case)
  std::vector<Integer> cycle_row;              // Δ^{(M'r)}_{target,e}, e < M
  std::vector<std::vector<Integer>> gamma;     // gamma[j][e] = Γ_{i,e,j}
  std::vector<std::string> sequences;          // "label: behaviour" for every sequence examined
  std::string minimal_polynomial;              // of the decisive sequence
  std::string profile;
  bool shift_identity = true;
};

struct VertexVerdict {
  unsigned vertex = 0;
  Category category = Category::Unknown;
  Verdict result = Verdict::Unknown;
  Certificate cert;
  std::string reason;
};

struct AnalysisBudgets {
  ExpansionBudget expansion;
  unsigned long p_bound = 0;   // 0: default bound
  std::size_t fit_window = 0;  // 0: 4·order
  bool exhaustive = false;     // keep deciding after the first negative vertex
};

struct AnalysisReport {
  explicit AnalysisReport(PositionalSystem s) : system(std::move(s)) {}

  PositionalSystem system;
  AnalysisBudgets budgets;
  std::optional<AlternateBase> base;
  std::optional<BaseFailure> base_failure;
  std::vector<ExpansionRecord> expansions;
  std::vector<UltimatelyPeriodicWord> quasi_greedy;  // filled only when every expansion is resolved
  std::optional<SuccessorGraph> graph;
  std::vector<VertexVerdict> vertices;
  // Period (in n) after which the maximal words of each residue class repeat their shape.
  std::vector<unsigned long> vertex_period;
  Verdict overall = Verdict::Unknown;
  std::optional<unsigned> witness;
  std::vector<std::string> notes;
  std::shared_ptr<const Dfa> automaton;

  // p · lcm of the vertex periods: a period in lengths for Max(L_U).
  unsigned long length_period() const;
};

// Everything a single vertex decision reads. The sequences are filled lazily.
class Decider {
 public:
  Decider(const PositionalSystem& sys, const AlternateBase& base, const std::vector<ExpansionRecord>& records,
          const SuccessorGraph& graph, std::size_t fit_window = 0);

  VertexVerdict decide_no_successor(unsigned i);
  VertexVerdict decide_leads_no_successor(unsigned i);
  std::vector<VertexVerdict> decide_cycle(unsigned root);
  VertexVerdict decide_leads_cycle(unsigned i);

  // Δ_i for a finite vertex, with its classification.
  const DeltaSeq& delta(unsigned i);
  const PeriodicityReport& report(unsigned i);
  const std::vector<std::optional<DeltaSeq>>& deltas() const { return deltas_; }
  const std::vector<std::optional<PeriodicityReport>>& reports() const { return reports_; }
  unsigned long vertex_period(unsigned i) const { return period_[i]; }

 private:
  void ensure(unsigned i);

  const PositionalSystem& sys_;
  const AlternateBase& base_;
  const std::vector<ExpansionRecord>& records_;
  const SuccessorGraph& graph_;
  std::size_t fit_window_;
  std::vector<std::optional<DeltaSeq>> deltas_;
  std::vector<std::optional<PeriodicityReport>> reports_;
  std::vector<unsigned long> period_;
};

AnalysisReport analyze(const PositionalSystem& sys, const AnalysisBudgets& budgets = {});

}  // namespace numsys
