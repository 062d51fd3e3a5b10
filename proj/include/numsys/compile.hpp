#pragma once
// From a REGULAR verdict to a DFA for L_U.

#include <vector>

#include "numsys/automaton.hpp"
#include "numsys/decide.hpp"
#include "numsys/slender.hpp"

namespace numsys {

// Max(L_U) = finite ∪ ⋃_j x_j y_j* z_j with |y_j| = d, |x_j z_j| = n + j (n a multiple of d, n ≥ d),
// y_j and z_j not starting with the same digit, and x_j nonempty.
struct MaxWordsDecomposition {
  SlenderDecomposition slender;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t validated_to = 0;
};

// Tries the divisors of `period` in increasing order and keeps the first one that fits every maximal word
// of length ≤ horizon (0: chosen from the period). Throws DecompositionMismatch otherwise.
MaxWordsDecomposition decompose_max_words(const PositionalSystem& sys, std::size_t period, std::size_t horizon = 0);
// Uses the length period certified by a REGULAR report.
MaxWordsDecomposition decompose_max_words(const PositionalSystem& sys, const AnalysisReport& report);

struct NumerationNfa {
  Nfa nfa;                // spine states (j,k) plus the P_j and S_j parts
  std::vector<Dfa> P, S;  // the finite parts on their own, for inspection
  Dfa k1, k2;
  std::size_t spine_states = 0;
};

// Digit alphabet size for L_U: one more than the largest digit of a greedy word.
unsigned numeration_alphabet(const PositionalSystem& sys, const MaxWordsDecomposition& m);

// Subset constructions stop with StateLimitExceeded past this many states.
inline constexpr std::size_t kDefaultStateLimit = 200000;

NumerationNfa build_numeration_nfa(const MaxWordsDecomposition& m, const PositionalSystem& sys,
                                   std::size_t max_states = kDefaultStateLimit);
// determinize(A) \ (K1 ∪ K2), minimized. Accepts L_U with leading zeros.
Dfa compile(const MaxWordsDecomposition& m, const PositionalSystem& sys, std::size_t max_states = kDefaultStateLimit);
// Decomposes and compiles when the report says REGULAR, storing the DFA in report.automaton.
// Returns false (with a note) otherwise.
bool attach_automaton(AnalysisReport& report, std::size_t max_states = kDefaultStateLimit);

}  // namespace numsys
