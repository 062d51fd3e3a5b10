#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "numsys/automaton.hpp"

using namespace numsys;

namespace {

// Complete DFA from a transition table rows[q] = {next on 0, next on 1, ...}.
Dfa table(std::vector<std::vector<State>> rows, std::vector<bool> accepting) {
  Dfa d;
  d.alphabet = static_cast<unsigned>(rows.at(0).size());
  for (const auto& r : rows) d.delta.insert(d.delta.end(), r.begin(), r.end());
  d.accepting = std::move(accepting);
  return d;
}

std::vector<FiniteWord> all_words(unsigned alphabet, std::size_t len) {
  std::vector<FiniteWord> out{FiniteWord()};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<FiniteWord> next;
    for (const auto& w : out)
      for (Digit a = 0; a < alphabet; ++a) next.push_back(w + FiniteWord({a}));
    out = std::move(next);
  }
  return out;
}

// Binary words with no factor 11.
Dfa no_11() { return table({{0, 1}, {0, 2}, {2, 2}}, {true, true, false}); }
// Binary words with an even number of 1s.
Dfa even_ones() { return table({{0, 1}, {1, 0}}, {true, false}); }

bool has_11(const FiniteWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 1 && w[i + 1] == 1) return true;
  return false;
}

// Table filling over reachable states: number of Myhill-Nerode classes.
std::size_t reference_classes(const Dfa& d) {
  std::vector<bool> seen(d.size(), false);
  std::vector<State> order{d.initial};
  seen[d.initial] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (Digit a = 0; a < d.alphabet; ++a)
      if (!seen[d.next(order[k], a)]) {
        seen[d.next(order[k], a)] = true;
        order.push_back(d.next(order[k], a));
      }
  const std::size_t n = d.size();
  std::vector<std::vector<bool>> apart(n, std::vector<bool>(n, false));
  for (State p : order)
    for (State q : order) apart[p][q] = d.accepting[p] != d.accepting[q];
  for (bool changed = true; changed;) {
    changed = false;
    for (State p : order)
      for (State q : order)
        for (Digit a = 0; a < d.alphabet && !apart[p][q]; ++a)
          if (apart[d.next(p, a)][d.next(q, a)]) apart[p][q] = changed = true;
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j) fresh = apart[order[i]][order[j]];
    classes += fresh;
  }
  return classes;
}

}  // namespace

TEST(Dfa, MinimizeMatchesTableFilling) {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    Dfa d;
    d.alphabet = 1 + rng() % 3;
    std::size_t n = 1 + rng() % 14;
    for (std::size_t q = 0; q < n; ++q) {
      d.accepting.push_back(rng() % 3 == 0);
      for (Digit a = 0; a < d.alphabet; ++a) d.delta.push_back(static_cast<State>(rng() % n));
    }
    d.initial = static_cast<State>(rng() % n);
    Dfa m = minimize(d);
    ASSERT_EQ(m.size(), reference_classes(d)) << t;
    ASSERT_TRUE(equivalent(m, d)) << t;
    ASSERT_EQ(minimize(m).delta, m.delta) << t;
  }
}

TEST(Nfa, SubsetConstructionStopsAtTheLimit) {
  // (0|1)*1(0|1)^6 needs 2^7 subsets.
  Nfa n(2);
  std::vector<State> s;
  for (int k = 0; k <= 7; ++k) s.push_back(n.add_state(k == 7));
  n.initial = {s[0]};
  n.add_edge(s[0], 0, s[0]);
  n.add_edge(s[0], 1, s[0]);
  n.add_edge(s[0], 1, s[1]);
  for (int k = 1; k < 7; ++k) {
    n.add_edge(s[k], 0, s[k + 1]);
    n.add_edge(s[k], 1, s[k + 1]);
  }
  EXPECT_EQ(determinize(n).size(), 128u);
  EXPECT_EQ(determinize(n, 128).size(), 128u);
  EXPECT_THROW(determinize(n, 100), StateLimitExceeded);
}

TEST(Dfa, MinimizeMergesEquivalentStates) {
  // States 1 and 2 both accept everything.
  Dfa d = table({{1, 2}, {1, 1}, {2, 2}}, {false, true, true});
  Dfa m = minimize(d);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(equivalent(d, m));
  EXPECT_EQ(minimize(m).delta, m.delta);
  EXPECT_EQ(minimize(m).accepting, m.accepting);
}

TEST(Dfa, MinimizeDropsUnreachable) {
  Dfa d = table({{0, 0}, {1, 0}}, {true, false});
  EXPECT_EQ(minimize(d).size(), 1u);
}

TEST(Dfa, BooleanOperationsAgreeWithMembership) {
  Dfa a = no_11(), b = even_ones();
  Dfa i = intersection(a, b), u = union_of(a, b), d = difference(a, b), c = complement(a);
  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& w : all_words(2, len)) {
      bool x = a.accepts(w), y = b.accepts(w);
      ASSERT_EQ(x, !has_11(w));
      EXPECT_EQ(i.accepts(w), x && y);
      EXPECT_EQ(u.accepts(w), x || y);
      EXPECT_EQ(d.accepts(w), x && !y);
      EXPECT_EQ(c.accepts(w), !x);
    }
  EXPECT_TRUE(equivalent(difference(a, a), empty_language(2)));
  EXPECT_FALSE(equivalent(a, b));
}

TEST(Dfa, CountAndWordsOfLength) {
  Dfa a = no_11();
  // Fibonacci numbers.
  std::vector<long> fib{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (std::size_t n = 0; n < fib.size(); ++n) EXPECT_EQ(a.count(n), Integer(fib[n]));
  auto w = a.words_of_length(3);
  EXPECT_EQ(w.size(), 5u);
  EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
}

TEST(Nfa, SubsetConstructionWithEpsilon) {
  // (0|1)*1 via an epsilon move, i.e. words ending in 1.
  Nfa n(2);
  State s = n.add_state(), t = n.add_state(), f = n.add_state(true);
  n.initial = {s};
  n.add_edge(s, 0, s);
  n.add_edge(s, 1, s);
  n.add_epsilon(s, t);
  n.add_edge(t, 1, f);
  Dfa d = minimize(determinize(n));
  EXPECT_EQ(d.size(), 2u);
  for (std::size_t len = 0; len <= 6; ++len)
    for (const auto& w : all_words(2, len)) {
      bool expect = !w.empty() && w[w.size() - 1] == 1;
      EXPECT_EQ(d.accepts(w), expect);
      EXPECT_EQ(n.accepts(w), expect);
    }
}

TEST(Nfa, ReverseAndHalfStep) {
  Dfa a = no_11();
  Dfa r = minimize(determinize(reverse(to_nfa(a))));
  EXPECT_TRUE(equivalent(r, a));  // no factor 11 is reversal closed
  // words starting with 1 -> words ending with 1
  Dfa starts1 = table({{1, 2}, {1, 1}, {2, 2}}, {false, false, true});
  Dfa ends1 = reverse_determinize(minimize(starts1));
  for (std::size_t len = 0; len <= 6; ++len)
    for (const auto& w : all_words(2, len)) EXPECT_EQ(ends1.accepts(w), !w.empty() && w[w.size() - 1] == 1);
  EXPECT_EQ(minimize(ends1).size(), ends1.size());
}

TEST(Dfa, StripLeadingZerosAndAlphabet) {
  Dfa s = strip_leading_zeros(no_11());
  EXPECT_FALSE(s.accepts(FiniteWord::parse("01")));
  EXPECT_TRUE(s.accepts(FiniteWord::parse("101")));
  EXPECT_TRUE(s.accepts(FiniteWord()));
  Dfa w = with_alphabet(no_11(), 3);
  EXPECT_EQ(w.alphabet, 3u);
  EXPECT_FALSE(w.accepts(FiniteWord::parse("2")));
  EXPECT_TRUE(w.accepts(FiniteWord::parse("1010")));
  Dfa one = single_word(FiniteWord::parse("201"), 3);
  EXPECT_TRUE(one.accepts(FiniteWord::parse("201")));
  EXPECT_FALSE(one.accepts(FiniteWord::parse("20")));
}

TEST(Dfa, MaxWordsAutomatonPicksLexicographicMaximum) {
  Dfa m = minimize(max_words_automaton(no_11()));
  for (std::size_t n = 0; n <= 9; ++n) {
    auto words = m.words_of_length(n);
    ASSERT_EQ(words.size(), 1u) << n;
    auto all = no_11().words_of_length(n);
    EXPECT_EQ(words[0], *std::max_element(all.begin(), all.end()));
  }
}

TEST(Dfa, DotAndJsonAreDeterministic) {
  Dfa a = minimize(no_11());
  EXPECT_EQ(to_dot(a), to_dot(minimize(table({{0, 1}, {0, 2}, {2, 2}}, {true, true, false}))));
  auto j = nlohmann::json::parse(to_json(a));
  EXPECT_EQ(j["alphabet"], 2);
  EXPECT_EQ(j["states"], 3);
  EXPECT_EQ(j["initial"], 0);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(to_json(a), to_json(minimize(a)));
  EXPECT_NE(to_dot(a).find("doublecircle"), std::string::npos);
}
