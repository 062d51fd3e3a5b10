#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "numsys/slender.hpp"

using namespace numsys;

namespace {

// Reference greedy algorithm, written out directly on the term list.
std::string naive_rep(const std::vector<Integer>& U, Integer x) {
  std::size_t len = 0;
  while (len < U.size() && U[len] <= x) ++len;
  std::string out;
  for (std::size_t k = len; k-- > 0;) {
    Integer q = x / U[k];
    x -= q * U[k];
    out += q.get_str();
  }
  return out;
}

}  // namespace

TEST(PositionalSystem, TermsFollowTheRecurrence) {
  PositionalSystem z = fixtures::system("zeckendorf");
  std::vector<Integer> t = z.terms(10);
  std::vector<Integer> expected{1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  EXPECT_EQ(t, expected);
  EXPECT_EQ(z.characteristic_polynomial(), IntPolynomial({Integer(-1), Integer(-1), Integer(1)}));
}

TEST(PositionalSystem, RejectsBadInput) {
  EXPECT_THROW(fixtures::make({1, 1}, {1}), InvalidSystem);
  EXPECT_THROW(fixtures::make({1, 1}, {2, 3}), InvalidSystem);
  // 1, 2, 1: not increasing
  PositionalSystem bad = fixtures::make({-1, 1}, {1, 2});
  EXPECT_THROW(bad.term(5), NotIncreasing);
}

TEST(FiniteWord, ParseAndPrint) {
  EXPECT_EQ(FiniteWord::parse("2001").digits, (std::vector<Digit>{2, 0, 0, 1}));
  EXPECT_EQ(FiniteWord::parse("10.2.0").digits, (std::vector<Digit>{10, 2, 0}));
  EXPECT_EQ(FiniteWord({10, 2}).str(), "10.2");
  EXPECT_EQ(FiniteWord().display(), "ε");
  EXPECT_EQ(power(FiniteWord::parse("21"), 3).str(), "212121");
  EXPECT_LT(FiniteWord::parse("2001"), FiniteWord::parse("201"));
}

TEST(Greedy, MatchesReferenceOnFixtures) {
  for (const char* name : {"zeckendorf", "two_piece_max_words", "n_three_to_n", "squares", "base_ten"}) {
    PositionalSystem sys = fixtures::system(name);
    std::vector<Integer> U = sys.terms(60);
    for (long x = 0; x < 3000; x += 7) {
      FiniteWord w = rep(sys, Integer(x));
      EXPECT_EQ(w.str(), naive_rep(U, Integer(x))) << name << " x=" << x;
      EXPECT_EQ(val(sys, w), Integer(x));
      EXPECT_TRUE(is_greedy(sys, w));
    }
  }
}

TEST(Greedy, IsGreedyRejectsNonGreedyWords) {
  PositionalSystem z = fixtures::system("zeckendorf");
  EXPECT_FALSE(is_greedy(z, FiniteWord::parse("11")));
  EXPECT_FALSE(is_greedy(z, FiniteWord::parse("2")));
  EXPECT_TRUE(is_greedy(z, FiniteWord::parse("1010")));
  EXPECT_TRUE(is_greedy(z, FiniteWord::parse("0101")));
}

TEST(Greedy, MaxWordIsRepOfTermMinusOne) {
  PositionalSystem sys = fixtures::system("two_piece_max_words");
  for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(max_word(sys, n), rep(sys, sys.term(n) - 1));
  EXPECT_EQ(max_word(sys, 6).str(), "211100");
  EXPECT_EQ(max_word(sys, 7).str(), "2101011");
}

// U_n = n·3^n + 1: the first fourteen maximal words.
TEST(Greedy, MaximalWordsOfNThreeToN) {
  PositionalSystem sys = fixtures::system("n_three_to_n");
  const std::vector<std::pair<long, const char*>> table{
      {0, ""},          {3, "3"},           {18, "42"},         {81, "411"},
      {324, "3402"},    {1215, "32400"},    {4374, "320400"},   {15309, "3123333"},
      {52488, "31123332"}, {177147, "310320333"}, {590490, "3101123331"}, {1948617, "30310320330"},
      {6377292, "302310320322"}, {20726199, "3022101123321"}};
  for (std::size_t n = 0; n < table.size(); ++n) {
    EXPECT_EQ(sys.term(n) - 1, Integer(table[n].first)) << n;
    EXPECT_EQ(max_word(sys, n).str(), table[n].second) << n;
  }
}

TEST(Greedy, RepIcPadsToLength) {
  PositionalSystem sys = fixtures::system("zeckendorf");
  // U_5 - 1 = 12 = 10101 in Zeckendorf
  EXPECT_EQ(rep_ic(sys, 1, 0, Integer(1), 5).str(), "10101");
  // U_5 - 10 = 3 -> 100, padded to length 5
  EXPECT_EQ(rep_ic(sys, 1, 0, Integer(10), 5).str(), "00100");
}

TEST(OracleLanguage, EqualsPaddedRepresentations) {
  PositionalSystem sys = fixtures::system("beta_one");
  std::set<FiniteWord> lang = oracle_language(sys, 6);
  std::set<FiniteWord> ref;
  std::vector<Integer> U = sys.terms(8);
  for (std::size_t len = 0; len <= 6; ++len)
    for (long x = 0; Integer(x) < U[len]; ++x) {
      std::string s = naive_rep(U, Integer(x));
      ref.insert(FiniteWord::parse(std::string(len - s.size(), '0') + s));
    }
  EXPECT_EQ(lang, ref);
}

TEST(OracleLanguage, SuffixClosed) {
  for (const char* name : {"two_piece_max_words", "squares", "sqrt13_pair"}) {
    PositionalSystem sys = fixtures::system(name);
    std::set<FiniteWord> lang = oracle_language(sys, 7);
    for (const auto& w : lang)
      for (std::size_t k = 0; k <= w.size(); ++k) EXPECT_TRUE(lang.count(w.suffix(k))) << name << " " << w.str();
  }
}

TEST(AlphabetMax, LargestDigit) {
  EXPECT_EQ(alphabet_max(fixtures::system("base_ten")), 9u);
  EXPECT_EQ(alphabet_max(fixtures::system("zeckendorf")), 1u);
  EXPECT_EQ(alphabet_max(fixtures::system("two_piece_max_words")), 2u);
}

TEST(Slender, DecompositionWordsAndThinness) {
  SlenderDecomposition m;
  m.finite = {FiniteWord(), FiniteWord::parse("1"), FiniteWord::parse("11"), FiniteWord::parse("101")};
  m.pieces = {{FiniteWord::parse("21"), FiniteWord::parse("11"), FiniteWord::parse("00")},
              {FiniteWord::parse("2101"), FiniteWord::parse("01"), FiniteWord::parse("1")}};
  EXPECT_EQ(m.period(), 2u);
  EXPECT_EQ(m.start(), 4u);
  EXPECT_EQ(m.words_of_length(8), std::vector<FiniteWord>{FiniteWord::parse("21111100")});
  EXPECT_NO_THROW(m.check_thin(30));
  SlenderDecomposition bad = m;
  bad.finite.push_back(FiniteWord::parse("2"));
  EXPECT_THROW(bad.check_thin(10), InvalidCandidate);
}

TEST(Slender, SystemFromMaxWords) {
  SlenderDecomposition m;
  m.finite = {FiniteWord(), FiniteWord::parse("1"), FiniteWord::parse("11"), FiniteWord::parse("101")};
  m.pieces = {{FiniteWord::parse("21"), FiniteWord::parse("11"), FiniteWord::parse("00")},
              {FiniteWord::parse("2101"), FiniteWord::parse("01"), FiniteWord::parse("1")}};
  CandidateSystem c = system_from_max_words(m);
  std::vector<Integer> init{1, 2, 4, 6, 17, 44, 116, 286, 760};
  ASSERT_GE(c.terms.size(), init.size());
  EXPECT_EQ(std::vector<Integer>(c.terms.begin(), c.terms.begin() + 9), init);
  // Generated system reproduces the words.
  for (std::size_t n = 0; n < 16; ++n) EXPECT_EQ(max_word(c.system, n), m.words_of_length(n).at(0)) << n;
}

TEST(Slender, InvalidCandidateIsRejected) {
  SlenderDecomposition m;
  m.finite = {FiniteWord(), FiniteWord::parse("2")};
  m.pieces = {{FiniteWord::parse("1"), FiniteWord::parse("1"), FiniteWord()}};  // 11 after 2: not increasing
  EXPECT_THROW(system_from_max_words(m), InvalidCandidate);
}
