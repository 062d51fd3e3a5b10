#include "numsys/compile.hpp"

#include <algorithm>
#include <map>

namespace numsys {

namespace {

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

bool ends_with(const FiniteWord& w, const FiniteWord& s) {
  return w.size() >= s.size() && std::equal(s.digits.begin(), s.digits.end(), w.digits.end() - s.size());
}

std::size_t lcp(const FiniteWord& a, const FiniteWord& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

// (x, y, z) with w(ℓ) = x z, w(ℓ + d) = x y z and y[0] ≠ z[0]; x is as long as possible.
std::optional<SlenderPiece> align(const FiniteWord& shorter, const FiniteWord& longer, std::size_t d) {
  std::size_t a = lcp(shorter, longer);
  SlenderPiece pc{longer.prefix(a), FiniteWord(std::vector<Digit>(longer.digits.begin() + a, longer.digits.begin() + a + d)),
                  shorter.suffix(shorter.size() - a)};
  if (pc.x + pc.y + pc.z != longer) return std::nullopt;
  return pc;
}

std::optional<MaxWordsDecomposition> try_period(const std::vector<FiniteWord>& w, std::size_t d, std::size_t period) {
  const std::size_t H = w.size() - 1;
  if (H < 3 * d + 2) return std::nullopt;
  std::vector<SlenderPiece> by_residue(d);
  std::vector<std::size_t> low(d);
  for (std::size_t c = 0; c < d; ++c) {
    // Largest ℓ ≡ c (mod d) with ℓ + d ≤ H.
    std::size_t l0 = H - d - ((H - d + d - c) % d);
    auto pc = align(w[l0], w[l0 + d], d);
    if (!pc || pc->x.empty()) return std::nullopt;
    // Move down while the shape still explains the shorter maximal words.
    while (pc->x.size() > d && ends_with(pc->x, pc->y)) {
      FiniteWord x2 = pc->x.prefix(pc->x.size() - d);
      if (w[x2.size() + pc->z.size()] != x2 + pc->z) break;
      pc->x = x2;
    }
    low[c] = pc->x.size() + pc->z.size();
    by_residue[c] = *pc;
  }
  // n: multiple of d, at least d, with n + j ≥ the lowest length of residue j.
  std::size_t n = d;
  for (std::size_t j = 0; j < d; ++j)
    while (n + j < low[j]) n += d;
  // Every residue of the certified period must be seen repeating at least three times below the horizon.
  if (n + 3 * period + d > H) return std::nullopt;
  MaxWordsDecomposition m;
  m.d = d;
  m.n = n;
  for (std::size_t l = 0; l < n; ++l) m.slender.finite.push_back(w[l]);
  for (std::size_t j = 0; j < d; ++j) {
    SlenderPiece pc = by_residue[(n + j) % d];
    std::size_t base = pc.x.size() + pc.z.size();
    pc.x = pc.x + power(pc.y, (n + j - base) / d);
    m.slender.pieces.push_back(pc);
  }
  for (std::size_t l = 0; l <= H; ++l) {
    auto ws = m.slender.words_of_length(l);
    if (ws.size() != 1 || ws.front() != w[l]) return std::nullopt;
  }
  m.validated_to = H;
  return m;
}

// Words whose length l satisfies l < n and l ≡ j (mod d).
Dfa lengths_below(unsigned A, std::size_t j, std::size_t d, std::size_t n) {
  Dfa r;
  r.alphabet = A;
  for (std::size_t l = 0; l <= n; ++l) {
    r.accepting.push_back(l < n && l % d == j);
    for (Digit c = 0; c < A; ++c) r.delta.push_back(static_cast<State>(std::min(l + 1, n)));
  }
  return r;
}

// Words of length |z| that are lexicographically at most z.
Dfa at_most(const FiniteWord& z, unsigned A) {
  const std::size_t L = z.size();
  // 2k: equal to z so far, 2k+1: already below, after k digits. 2L+2 is dead.
  const State dead = static_cast<State>(2 * L + 2);
  Dfa r;
  r.alphabet = A;
  r.delta.assign((2 * L + 3) * A, dead);
  r.accepting.assign(2 * L + 3, false);
  r.accepting[2 * L] = r.accepting[2 * L + 1] = true;
  for (std::size_t k = 0; k < L; ++k)
    for (Digit c = 0; c < A; ++c) {
      r.delta[(2 * k + 1) * A + c] = static_cast<State>(2 * k + 3);
      if (c < z[k]) r.delta[2 * k * A + c] = static_cast<State>(2 * k + 3);
      if (c == z[k]) r.delta[2 * k * A + c] = static_cast<State>(2 * k + 2);
    }
  return r;
}

// From `from`, accepts the words of length |w| that are lexicographically greater than w.
void add_greater_than(Nfa& a, State from, const FiniteWord& w) {
  const std::size_t L = w.size();
  if (L == 0) return;
  std::vector<State> greater(L + 1);
  for (std::size_t k = 1; k <= L; ++k) greater[k] = a.add_state(k == L);
  for (std::size_t k = 1; k < L; ++k)
    for (Digit c = 0; c < a.alphabet; ++c) a.add_edge(greater[k], c, greater[k + 1]);
  State eq = from;
  for (std::size_t k = 0; k < L; ++k) {
    for (Digit c = w[k] + 1; c < a.alphabet; ++c) a.add_edge(eq, c, greater[k + 1]);
    if (k + 1 < L) {
      State nxt = a.add_state(false);
      a.add_edge(eq, w[k], nxt);
      eq = nxt;
    }
  }
}

// Copies the DFA's useful states (those reaching acceptance) into `a`; returns the copy of its initial state.
State embed(Nfa& a, const Dfa& f) {
  std::vector<bool> useful(f.accepting);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < f.size(); ++q)
      for (Digit c = 0; c < f.alphabet && !useful[q]; ++c)
        if (useful[f.next(static_cast<State>(q), c)]) useful[q] = changed = true;
  }
  std::vector<State> id(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) id[q] = a.add_state(f.accepting[q]);
  for (std::size_t q = 0; q < f.size(); ++q)
    for (Digit c = 0; c < f.alphabet; ++c) {
      State t = f.next(static_cast<State>(q), c);
      if (useful[q] && useful[t]) a.add_edge(id[q], c, id[t]);
    }
  return id[f.initial];
}

// A*·{s : |s| = ℓ ≤ N, s >lex max word of length ℓ}. The reversed language is read least significant
// digit first, keeping for every pending length whether the digits so far compare <, = or > against the
// maximal word; that DFA is small, and one reversal brings it back.
Dfa suffix_beats_max_word(const MaxWordsDecomposition& m, unsigned A, std::size_t N, std::size_t max_states) {
  std::vector<FiniteWord> w(N + 1);
  for (std::size_t l = 1; l <= N; ++l) w[l] = m.slender.words_of_length(l).front();
  // Key: (digits read k, comparisons for ℓ = k+1 .. N). Two extra states: accept-all and reject-all.
  using Key = std::pair<std::size_t, std::vector<signed char>>;
  std::map<Key, State> index;
  std::vector<Key> keys;
  Dfa r;
  r.alphabet = A;
  const State acc = 0, dead = 1;
  r.accepting = {true, false};
  r.delta.assign(2 * A, 0);
  for (Digit a = 0; a < A; ++a) r.delta[A + a] = dead;
  auto intern = [&](Key key) {
    if (key.first >= N) return dead;
    auto [it, fresh] = index.emplace(key, static_cast<State>(r.size()));
    if (fresh) {
      keys.push_back(std::move(key));
      r.accepting.push_back(false);
      r.delta.resize(r.accepting.size() * A, dead);
    }
    return it->second;
  };
  r.initial = intern({0, std::vector<signed char>(N, 0)});
  for (std::size_t i = 0; i < keys.size(); ++i) {
    Key key = keys[i];
    State from = static_cast<State>(i + 2);
    const std::size_t k = key.first;
    for (Digit a = 0; a < A; ++a) {
      std::vector<signed char> c = key.second;
      for (std::size_t l = k + 1; l <= N; ++l) {
        Digit ref = w[l][l - 1 - k];
        if (a != ref) c[l - k - 1] = a > ref ? 1 : -1;
      }
      State to;
      if (c[0] > 0) {
        to = acc;
      } else {
        to = intern({k + 1, std::vector<signed char>(c.begin() + 1, c.end())});
      }
      r.delta[std::size_t(from) * A + a] = to;
    }
  }
  return minimize(reverse_determinize(minimize(r), max_states));
}

State add_any_loop(Nfa& a) {
  State s = a.add_state(false);
  for (Digit c = 0; c < a.alphabet; ++c) a.add_edge(s, c, s);
  return s;
}

State add_chain(Nfa& a, State from, const FiniteWord& w) {
  State q = from;
  for (Digit c : w.digits) {
    State t = a.add_state(false);
    a.add_edge(q, c, t);
    q = t;
  }
  return q;
}

}  // namespace

MaxWordsDecomposition decompose_max_words(const PositionalSystem& sys, std::size_t period, std::size_t horizon) {
  if (period == 0) throw DecompositionMismatch("no length period available");
  if (horizon == 0) horizon = std::max<std::size_t>(64, 6 * period + 32) + 4 * sys.order();
  std::vector<FiniteWord> w(horizon + 1);
  for (std::size_t l = 0; l <= horizon; ++l) w[l] = max_word(sys, l);
  for (std::size_t d : divisors(period))
    if (auto m = try_period(w, d, period)) return *m;
  throw DecompositionMismatch("the maximal words up to length " + std::to_string(horizon) +
                              " do not split as x y* z pieces with |y| dividing " + std::to_string(period));
}

MaxWordsDecomposition decompose_max_words(const PositionalSystem& sys, const AnalysisReport& report) {
  if (report.overall != Verdict::Regular) throw DecompositionMismatch("the verdict is not REGULAR");
  // Max words only settle into shape once they run past the quasi-greedy preperiods.
  const std::size_t period = report.length_period();
  std::size_t tail = 0;
  for (const auto& q : report.quasi_greedy) tail = std::max(tail, q.prefix.size() + q.period.size());
  std::size_t horizon = std::max<std::size_t>(64, 6 * period + 32) + 4 * sys.order();
  return decompose_max_words(sys, period, std::max(horizon, 2 * tail + 6 * period + 16));
}

unsigned numeration_alphabet(const PositionalSystem& sys, const MaxWordsDecomposition& m) {
  Digit top = alphabet_max(sys, std::max<std::size_t>(m.validated_to, 8));
  for (std::size_t l = 0; l <= m.n + m.d; ++l)
    for (const auto& w : m.slender.words_of_length(l))
      for (Digit c : w.digits) top = std::max(top, c);
  return top + 1;
}

NumerationNfa build_numeration_nfa(const MaxWordsDecomposition& m, const PositionalSystem& sys,
                                   std::size_t max_states) {
  const unsigned A = numeration_alphabet(sys, m);
  const std::size_t d = m.d, n = m.n;
  const auto& pieces = m.slender.pieces;
  NumerationNfa out;
  Nfa& a = out.nfa;
  a = Nfa(A);

  // Spine: (j, k) for k < |x_j y_j|.
  std::vector<std::vector<State>> spine(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t len = pieces[j].x.size() + d;
    for (std::size_t k = 0; k < len; ++k) spine[j].push_back(a.add_state(false));
  }
  out.spine_states = a.size();
  for (std::size_t j = 0; j < d; ++j) {
    FiniteWord xy = pieces[j].x + pieces[j].y;
    std::size_t len = xy.size();
    for (std::size_t k = 0; k < len; ++k) {
      State to = k + 1 < len ? spine[j][k + 1] : spine[j][pieces[j].x.size()];
      a.add_edge(spine[j][k], xy[k], to);
      std::size_t target = ((j + d * (k + 1)) - (k + 1)) % d;
      for (Digit c = 0; c < xy[k]; ++c) a.add_edge(spine[j][k], c, spine[target][0]);
    }
  }
  // A padded word is greedy iff none of its suffixes beats the max word of the same length.
  std::size_t N = n + d - 1;
  for (const auto& pc : pieces) N = std::max(N, pc.z.size());
  out.k1 = suffix_beats_max_word(m, A, N, max_states);
  const Dfa greedy = complement(out.k1);
  for (std::size_t j = 0; j < d; ++j) {
    out.P.push_back(minimize(intersection(lengths_below(A, j, d, n), greedy)));
    out.S.push_back(minimize(intersection(at_most(pieces[j].z, A), greedy)));
    a.add_epsilon(spine[j][0], embed(a, out.P.back()));
    a.add_epsilon(spine[j][pieces[j].x.size()], embed(a, out.S.back()));
    a.initial.push_back(spine[j][0]);
  }
  // K2: x_j y_j^* followed by a word of length |z_j| beating z_j. Built reversed, then flipped back.
  {
    Nfa k(A);
    std::vector<State> starts;
    for (const auto& pc : pieces) {
      if (pc.z.empty()) continue;
      State s = k.add_state(false);
      starts.push_back(s);
      State h = add_chain(k, s, pc.x);
      State e = add_chain(k, h, pc.y.prefix(d - 1));
      k.add_edge(e, pc.y[d - 1], h);
      add_greater_than(k, h, pc.z);
    }
    k.initial = starts;
    Nfa r = reverse(k);
    State all = add_any_loop(r);
    r.accepting[all] = true;
    for (State s : starts) {
      r.accepting[s] = false;
      r.add_epsilon(s, all);
    }
    out.k2 = minimize(reverse_determinize(minimize(determinize(r, max_states)), max_states));
  }
  return out;
}

Dfa compile(const MaxWordsDecomposition& m, const PositionalSystem& sys, std::size_t max_states) {
  NumerationNfa parts = build_numeration_nfa(m, sys, max_states);
  Dfa spine = minimize(determinize(parts.nfa, max_states));
  return minimize(difference(spine, union_of(parts.k1, parts.k2)));
}

bool attach_automaton(AnalysisReport& report, std::size_t max_states) {
  if (report.overall != Verdict::Regular) return false;
  try {
    auto m = decompose_max_words(report.system, report);
    report.automaton = std::make_shared<const Dfa>(compile(m, report.system, max_states));
    return true;
  } catch (const Error& e) {
    report.notes.push_back(std::string("automaton not compiled: ") + e.what());
    return false;
  }
}

}  // namespace numsys
