#pragma once
// Finite automata over a digit alphabet 0..C.

#include <cstdint>
#include <string>
#include <vector>

#include "numsys/numeration.hpp"

namespace numsys {

using State = std::uint32_t;

struct Nfa {
  struct Edge {
    Digit digit;
    State to;
  };

  unsigned alphabet = 1;  // digits 0 .. alphabet-1
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<State>> epsilon;
  std::vector<State> initial;
  std::vector<bool> accepting;

  explicit Nfa(unsigned alphabet_size = 1) : alphabet(alphabet_size) {}

  std::size_t size() const { return edges.size(); }
  State add_state(bool accept = false);
  void add_edge(State from, Digit d, State to) { edges[from].push_back({d, to}); }
  void add_epsilon(State from, State to) { epsilon[from].push_back(to); }
  // Copies `other` in and returns the offset of its first state. Its initial states are not added.
  State absorb(const Nfa& other);
  bool accepts(const FiniteWord& w) const;
};

struct Dfa {
  unsigned alphabet = 1;
  // delta[q * alphabet + a]
  std::vector<State> delta;
  std::vector<bool> accepting;
  State initial = 0;

  std::size_t size() const { return accepting.size(); }
  State next(State q, Digit a) const { return delta[std::size_t(q) * alphabet + a]; }
  bool accepts(const FiniteWord& w) const;
  // Number of accepted words of length exactly n.
  Integer count(std::size_t n) const;
  std::vector<FiniteWord> words_of_length(std::size_t n) const;
};

// max_states > 0 bounds the subset construction (StateLimitExceeded past it).
Dfa determinize(const Nfa& n, std::size_t max_states = 0);
Nfa to_nfa(const Dfa& d);
// Edges flipped, initial and accepting states swapped.
Nfa reverse(const Nfa& n);
// Minimal DFA for the reversal of L(d) when every state of d is reachable (Brzozowski's half step).
Dfa reverse_determinize(const Dfa& d, std::size_t max_states = 0);
// Hopcroft refinement, unreachable states dropped, states renumbered breadth-first from the initial state
// with digits in increasing order. Two equivalent DFAs minimize to identical objects.
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);
Dfa with_alphabet(const Dfa& d, unsigned alphabet);  // extra digits go to a rejecting sink
Dfa intersection(const Dfa& a, const Dfa& b);
Dfa union_of(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);
// The accepted words with leading zeros removed (closure under deleting a leading 0).
Dfa strip_leading_zeros(const Dfa& d);
Dfa single_word(const FiniteWord& w, unsigned alphabet);
Dfa empty_language(unsigned alphabet);

// Lexicographically greatest word of each length: L \ L(B), B guessing a larger word of the same length.
Dfa max_words_automaton(const Dfa& d);

std::string to_dot(const Dfa& d, const std::string& name = "L");
std::string to_json(const Dfa& d);

// Compares the DFA with L_U on all lengths ≤ max_len. Empty string when they agree, otherwise the first
// discrepancy found.
std::string diff_with_oracle(const Dfa& d, const PositionalSystem& sys, std::size_t max_len);

}  // namespace numsys
