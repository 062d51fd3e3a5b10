#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace numsys;

namespace {

// w (leading zeros allowed) is greedy iff every suffix s has value < U_{|s|}.
bool ref_greedy(const std::vector<Integer>& U, const FiniteWord& w) {
  Integer v = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    v += Integer(w[w.size() - 1 - k]) * U[k];
    if (v >= U[k + 1]) return false;
  }
  return true;
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

const MaxWordsDecomposition& two_piece() {
  static const MaxWordsDecomposition m =
      decompose_max_words(fixtures::system("two_piece_max_words"), fixtures::report("two_piece_max_words"));
  return m;
}

std::set<std::string> strings(const Dfa& d, std::size_t max_len) {
  std::set<std::string> s;
  for (std::size_t n = 0; n <= max_len; ++n)
    for (const auto& w : d.words_of_length(n)) s.insert(w.str());
  return s;
}

}  // namespace

TEST(Decompose, TwoPieceShape) {
  const MaxWordsDecomposition& m = two_piece();
  EXPECT_EQ(m.d, 2u);
  EXPECT_EQ(m.n, 4u);
  ASSERT_EQ(m.slender.pieces.size(), 2u);
  EXPECT_EQ(m.slender.pieces[0].x.str(), "21");
  EXPECT_EQ(m.slender.pieces[0].y.str(), "11");
  EXPECT_EQ(m.slender.pieces[0].z.str(), "00");
  EXPECT_EQ(m.slender.pieces[1].x.str(), "2101");
  EXPECT_EQ(m.slender.pieces[1].y.str(), "01");
  EXPECT_EQ(m.slender.pieces[1].z.str(), "1");
  std::vector<std::string> finite;
  for (const auto& w : m.slender.finite) finite.push_back(w.str());
  EXPECT_EQ(finite, (std::vector<std::string>{"", "1", "11", "101"}));
}

TEST(Decompose, EveryRegularFixtureFitsItsMaxWords) {
  for (const auto& f : fixtures::all()) {
    const AnalysisReport& r = fixtures::report(f.name);
    if (r.overall != Verdict::Regular) continue;
    MaxWordsDecomposition m = decompose_max_words(r.system, r);
    for (std::size_t n = 0; n <= 60; ++n) {
      auto w = m.slender.words_of_length(n);
      ASSERT_EQ(w.size(), 1u) << f.name << " n=" << n;
      EXPECT_EQ(w[0], max_word(r.system, n)) << f.name << " n=" << n;
    }
  }
}

TEST(Decompose, OcticMaxWordsArePrefixesOfQuasiGreedy) {
  PositionalSystem sys = fixtures::system("octic_regular");
  const std::string even = "1101000011010000", odd = "1010000110100001";
  for (std::size_t n = 1; n <= 16; ++n)
    EXPECT_EQ(max_word(sys, n).str(), (n % 2 == 0 ? even : odd).substr(0, n)) << n;
}

TEST(NumerationNfa, TwoPieceParts) {
  PositionalSystem sys = fixtures::system("two_piece_max_words");
  NumerationNfa a = build_numeration_nfa(two_piece(), sys);
  ASSERT_EQ(a.P.size(), 2u);
  ASSERT_EQ(a.S.size(), 2u);
  EXPECT_EQ(strings(a.P[0], 6), (std::set<std::string>{"", "00", "01", "10", "11"}));
  EXPECT_EQ(strings(a.P[1], 6), (std::set<std::string>{"0", "1", "000", "001", "010", "011", "100", "101"}));
  EXPECT_EQ(strings(a.S[0], 6), (std::set<std::string>{"00"}));
  EXPECT_EQ(strings(a.S[1], 6), (std::set<std::string>{"0", "1"}));
  EXPECT_TRUE(a.k1.accepts(FiniteWord::parse("111")));
  for (std::size_t k = 0; k < 5; ++k)
    EXPECT_TRUE(a.k2.accepts(FiniteWord::parse("21" + std::string(2 * k, '1') + "01"))) << k;
  EXPECT_FALSE(a.k2.accepts(FiniteWord::parse("211100")));
}

// K1 and K2 only remove words that are not greedy, and A alone accepts every greedy word.
TEST(NumerationNfa, CutsAreSoundAndComplete) {
  for (const char* name : {"two_piece_max_words", "sqrt13_pair", "beta_one", "cubic_period"}) {
    PositionalSystem sys = fixtures::system(name);
    MaxWordsDecomposition m = decompose_max_words(sys, fixtures::report(name));
    NumerationNfa a = build_numeration_nfa(m, sys);
    Dfa whole = determinize(a.nfa);
    std::vector<Integer> U = sys.terms(14);
    std::size_t max_len = a.nfa.alphabet > 3 ? 6 : 10;
    for (std::size_t len = 0; len <= max_len; ++len)
      for (const auto& w : all_words(a.nfa.alphabet, len)) {
        bool g = ref_greedy(U, w);
        EXPECT_TRUE(!g || whole.accepts(w)) << name << " " << w.str();
        bool cut = a.k1.accepts(w) || a.k2.accepts(w);
        EXPECT_FALSE(cut && g) << name << " " << w.str();
      }
  }
}

TEST(Compile, TwoPieceAgreesWithOracle) {
  PositionalSystem sys = fixtures::system("two_piece_max_words");
  Dfa d = compile(two_piece(), sys);
  EXPECT_EQ(diff_with_oracle(d, sys, 14), "");
  std::set<FiniteWord> ref = oracle_language(sys, 9);
  std::set<FiniteWord> got;
  for (std::size_t n = 0; n <= 9; ++n)
    for (const auto& w : d.words_of_length(n)) got.insert(w);
  EXPECT_EQ(got, ref);
  std::vector<Integer> U = sys.terms(15);
  for (std::size_t len = 0; len <= 14; ++len) EXPECT_EQ(d.count(len), U[len]) << len;
}

TEST(Compile, BetaOneLanguage) {
  PositionalSystem sys = fixtures::system("beta_one");
  Dfa d = compile(decompose_max_words(sys, fixtures::report("beta_one")), sys);
  // 0*(ε ∪ 10* ∪ 1(00)*1); state 5 is the sink.
  Dfa ref;
  ref.alphabet = 2;
  ref.delta = {0, 1, 2, 4, 3, 5, 2, 4, 5, 5, 5, 5};
  ref.accepting = {true, true, true, true, true, false};
  ASSERT_EQ(d.alphabet, 2u);
  EXPECT_TRUE(equivalent(d, ref));
  for (std::size_t len = 0; len <= 14; ++len)
    for (const auto& w : all_words(2, len)) ASSERT_EQ(d.accepts(w), ref.accepts(w)) << w.str();
}

TEST(Compile, BaseTenIsOneState) {
  PositionalSystem sys = fixtures::system("base_ten");
  Dfa d = compile(decompose_max_words(sys, fixtures::report("base_ten")), sys);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.alphabet, 10u);
  EXPECT_EQ(strip_leading_zeros(d).count(3), Integer(900));
}

TEST(Compile, MembershipOfTwoThousandOne) {
  PositionalSystem sys = fixtures::system("sqrt13_pair");
  Dfa d = compile(decompose_max_words(sys, fixtures::report("sqrt13_pair")), sys);
  EXPECT_TRUE(d.accepts(FiniteWord::parse("2001")));
  EXPECT_EQ(d.accepts(FiniteWord::parse("2001")), is_greedy(sys, FiniteWord::parse("2001")));
  EXPECT_FALSE(d.accepts(FiniteWord::parse("2002")));
}

TEST(Compile, OracleCatchesAWrongAutomaton) {
  PositionalSystem sys = fixtures::system("two_piece_max_words");
  Dfa d = compile(two_piece(), sys);
  Dfa broken = union_of(d, single_word(FiniteWord::parse("2112"), d.alphabet));
  EXPECT_NE(diff_with_oracle(broken, sys, 6), "");
  Dfa missing = difference(d, single_word(FiniteWord::parse("101"), d.alphabet));
  EXPECT_NE(diff_with_oracle(missing, sys, 6), "");
}

TEST(Compile, AttachAutomatonOnlyWhenRegular) {
  AnalysisReport yes = analyze(fixtures::system("zeckendorf"));
  EXPECT_TRUE(attach_automaton(yes));
  ASSERT_TRUE(yes.automaton);
  EXPECT_EQ(yes.automaton->size(), 3u);
  AnalysisReport no = analyze(fixtures::system("squares"));
  EXPECT_FALSE(attach_automaton(no));
  EXPECT_FALSE(no.automaton);
}

TEST(Compile, StateLimitBecomesANote) {
  AnalysisReport r = analyze(fixtures::system("two_piece_max_words"));
  EXPECT_FALSE(attach_automaton(r, 5));
  EXPECT_FALSE(r.automaton);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.back().find("subset construction passed 5 states"), std::string::npos);
  EXPECT_THROW(compile(two_piece(), fixtures::system("two_piece_max_words"), 5), StateLimitExceeded);
}

TEST(Compile, MaxWordsOfCompiledLanguage) {
  for (const char* name : {"two_piece_max_words", "five_vertices", "chain_to_infinite"}) {
    PositionalSystem sys = fixtures::system(name);
    Dfa d = compile(decompose_max_words(sys, fixtures::report(name)), sys);
    Dfa mx = minimize(max_words_automaton(d));
    for (std::size_t n = 0; n <= 30; ++n) {
      auto w = mx.words_of_length(n);
      ASSERT_EQ(w.size(), 1u) << name << " " << n;
      EXPECT_EQ(w[0], max_word(sys, n)) << name << " " << n;
    }
  }
}
