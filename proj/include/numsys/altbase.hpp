#pragma once
// The alternate base attached to a linear numeration system, expansions of 1, and the successor graph.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "numsys/algebra/number_field.hpp"
#include "numsys/numeration.hpp"

namespace numsys {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::RealAlgebraic;

struct AlternateBase {
  unsigned p = 1;
  FieldPtr field;
  std::vector<FieldElement> betas;
  IntPolynomial minimal_polynomial;  // of U
  unsigned dominant_multiplicity = 1;

  const FieldElement& beta(std::size_t n) const { return betas[n % p]; }
  FieldElement product() const;
  // p = 1 and β = 1.
  bool degenerate() const;
};

enum class BaseFailureKind { NotRhoXiStructure, UnequalDominantDegrees, UnsupportedField, NoRecurrenceFound };
std::string to_string(BaseFailureKind k);

struct BaseFailure {
  BaseFailureKind kind;
  std::string reason;
};

using BaseResult = std::variant<AlternateBase, BaseFailure>;

// 2·lcm{k : φ(k) ≤ degree}, saturating.
unsigned long default_p_bound(unsigned degree);

// p_bound = 0 selects default_p_bound(deg of the minimal polynomial).
BaseResult extract_base(const PositionalSystem& sys, unsigned long p_bound = 0);

struct UltimatelyPeriodicWord {
  std::vector<Digit> prefix;
  std::vector<Digit> period;  // nonempty

  Digit at(std::size_t k) const;
  FiniteWord take(std::size_t n) const;
  // Minimal period, then shortest prefix.
  void normalize();
  // e.g. "11(00010)^ω", "2010^ω".
  std::string str() const;
  bool operator==(const UltimatelyPeriodicWord& o) const { return prefix == o.prefix && period == o.period; }
};

enum class ExpansionStatus { Finite, UltimatelyPeriodic, Unknown };
std::string to_string(ExpansionStatus s);

struct ExpansionRecord {
  unsigned shift = 0;
  ExpansionStatus status = ExpansionStatus::Unknown;
  std::vector<Digit> preperiod;  // all digits when Finite
  std::vector<Digit> period;     // empty unless UltimatelyPeriodic
  std::size_t steps_used = 0;
  std::string note;

  bool finite() const { return status == ExpansionStatus::Finite; }
  bool infinite() const { return status == ExpansionStatus::UltimatelyPeriodic; }
  bool resolved() const { return status != ExpansionStatus::Unknown; }
  // ℓ_i (Finite only).
  std::size_t length() const;
  // t_{i,k}, with zeros after a finite expansion.
  Digit digit(std::size_t k) const;
  UltimatelyPeriodicWord word() const;
};

struct ExpansionBudget {
  std::size_t steps = 10000;
  // Coordinates of the remainders growing past this many bits stop the run (reported as Unknown).
  std::size_t max_height_bits = 4096;
};

ExpansionRecord expand_one(const AlternateBase& base, unsigned i, const ExpansionBudget& budget = {});
std::vector<ExpansionRecord> expand_all(const AlternateBase& base, const ExpansionBudget& budget = {});
// Value of the digits in base B^{(i)}, from the closed form (1 for every valid record).
FieldElement expansion_value(const AlternateBase& base, const ExpansionRecord& rec);

std::vector<UltimatelyPeriodicWord> quasi_greedy(const std::vector<ExpansionRecord>& records);

enum class Category { NoSuccessor, LeadsToNoSuccessor, InCycle, LeadsToCycle, Unknown };
std::string to_string(Category c);

struct VertexClass {
  Category category = Category::Unknown;
  unsigned distance = 0;      // s for the two "leads to" categories
  unsigned cycle_length = 0;  // r for cycle categories
  unsigned target = 0;        // the NoSuccessor vertex reached, or σ^s(i) on the cycle
};

struct SuccessorGraph {
  unsigned p = 0;
  std::vector<std::optional<unsigned>> successor;
  std::vector<std::size_t> lengths;  // ℓ_i, 0 unless Finite
  std::vector<VertexClass> classes;

  unsigned sigma_pow(unsigned i, unsigned j) const;
  // k_{i,j} = ℓ_i + ℓ_{σ(i)} + … + ℓ_{σ^{j−1}(i)}.
  std::size_t k(unsigned i, unsigned j) const;
  // m_{i,j} with σ^j(i) = i + k_{i,j} − m_{i,j}·p.
  long m(unsigned i, unsigned j) const;
  std::vector<std::pair<unsigned, unsigned>> edges() const;
  // Vertices of the cycle containing i, starting at i.
  std::vector<unsigned> cycle_from(unsigned i) const;
};

// Throws UnresolvedExpansion on Unknown records unless allow_unresolved, in which case affected
// vertices get Category::Unknown.
SuccessorGraph build_graph(const std::vector<ExpansionRecord>& records, bool allow_unresolved = false);

struct IntermediateExpansion {
  FiniteWord prefix;
  std::size_t k = 0;
  long m = 0;
};

// Prefix of w_{i,j} = d'_i d'_{σ(i)} ⋯ d'_{σ^{j−1}(i)} d_{σ^j(i)}.
IntermediateExpansion intermediate_w(const std::vector<ExpansionRecord>& records, const SuccessorGraph& graph,
                                     unsigned i, unsigned j, std::size_t prefix_len);

}  // namespace numsys
