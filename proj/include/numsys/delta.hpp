#pragma once
// Auxiliary integer sequences built from U and the expansion digits, and their ultimate behaviour.

#include <optional>
#include <string>
#include <vector>

#include "numsys/algebra/cyclotomic.hpp"
#include "numsys/altbase.hpp"

namespace numsys {

using algebra::CyclotomicProfile;

// Either Δ_{i,q,m} (d_i infinite) or Δ_i (d_i finite), as a function of n.
// Holds a pointer to the system, which must outlive it.
struct DeltaSeq {
  enum class Kind { InfiniteVertex, FiniteVertex };
  Kind kind = Kind::FiniteVertex;
  const PositionalSystem* sys = nullptr;
  unsigned p = 1;
  unsigned i = 0;
  std::size_t q = 0, m = 0;  // InfiniteVertex
  std::vector<Digit> t;      // t_{i,0}, …, t_{i,offset−1}

  std::size_t offset() const { return kind == Kind::InfiniteVertex ? q + m : t.size(); }
  // Least n ≥ 1 with np − i ≥ offset.
  long first_index() const;
  Integer value_at(long n) const;
  std::string label() const;
};

DeltaSeq make_delta_iqm(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, std::size_t q,
                        std::size_t m);
DeltaSeq make_delta_i(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec);
Integer delta_iqm(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, std::size_t q, std::size_t m,
                  long n);
Integer delta_i(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, long n);

enum class Behaviour { UltimatelyZero, UltimatelyPeriodic, LinearDrift, Irregular };
std::string to_string(Behaviour b);

struct PeriodicityReport {
  Behaviour status = Behaviour::Irregular;
  long from = 0;              // the pattern holds for n ≥ from
  unsigned long period = 1;   // M: lcm of the unit-root orders
  IntPolynomial minimal_polynomial;
  CyclotomicProfile profile;
  std::vector<Integer> constants;  // periodic: ultimate value for n ≡ e (mod M), indexed by e
  std::vector<Integer> slopes;     // drift: ultimate x_{n+M} − x_n for n ≡ e (mod M)
  std::string note;

  bool periodic() const { return status == Behaviour::UltimatelyZero || status == Behaviour::UltimatelyPeriodic; }
  bool drift_stable() const { return periodic() || status == Behaviour::LinearDrift; }
};

// fit_window 0 means 4·order of the system.
PeriodicityReport classify(const DeltaSeq& seq, std::size_t fit_window = 0);

// Smallest k ≥ 1 with Δ_{i,q0,k·m0} ultimately zero, from the profile of Δ_{i,q0,m0}.
std::optional<unsigned long> ultimate_zero_k(const PeriodicityReport& rep, std::size_t m0, unsigned p);

// Ultimate value of seq at indices nM + e − shift (cross-checked one period later).
Integer ultimate_value(const DeltaSeq& seq, const PeriodicityReport& rep, unsigned long M, unsigned long e, long shift);
// Ultimate value of seq_{nM+e−shift} − seq_{(n−1)M+e−shift}.
Integer ultimate_increment(const DeltaSeq& seq, const PeriodicityReport& rep, unsigned long M, unsigned long e,
                           long shift);

struct CumulativeTable {
  unsigned long M = 1;
  // single[j][e] = Δ_{i,e,j}; partial[j][e] = Δ^{(j)}_{i,e}, j = 0..J.
  std::vector<std::vector<Integer>> single, partial;
};

// deltas/reports indexed by vertex; every vertex on the σ-orbit of i up to depth J must have an
// ultimately periodic Δ with period dividing M.
CumulativeTable cumulative_constants(const SuccessorGraph& graph, const std::vector<std::optional<DeltaSeq>>& deltas,
                                     const std::vector<std::optional<PeriodicityReport>>& reports, unsigned i,
                                     unsigned long M, unsigned J);

// gamma[j][e] = Γ_{i,e,j} for j < s.
std::vector<std::vector<Integer>> gamma_constants(const SuccessorGraph& graph,
                                                  const std::vector<std::optional<DeltaSeq>>& deltas,
                                                  const std::vector<std::optional<PeriodicityReport>>& reports,
                                                  unsigned i, unsigned long M, unsigned s);

// (Δ_i^{(j)})_n = Σ_{h<j} (Δ_{σ^h(i)})_{n − m_{i,h}}.
Integer cumulative_value(const SuccessorGraph& graph, const std::vector<std::optional<DeltaSeq>>& deltas, unsigned i,
                         unsigned j, long n);

}  // namespace numsys
