#pragma once
// Property checks over the fixtures plus a seeded random family. Each check returns "" or a description
// of the first violation.

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"

namespace props {

using namespace numsys;

struct Case {
  std::string name;
  PositionalSystem sys;
};

// Coefficients in [-2, 3], optionally spread over X^2 so the period is 2.
// Draws whose first 80 terms are not increasing are rejected.
inline std::vector<Case> random_systems(std::size_t count = 50) {
  std::mt19937 rng(20240611);
  std::vector<Case> out;
  while (out.size() < count) {
    unsigned stretch = 1 + rng() % 2;
    unsigned m = 1 + rng() % 3;
    std::vector<long> base(m);
    for (auto& c : base) c = long(rng() % 6) - 2;
    if (base[0] < 1) continue;
    std::vector<long> rec(m * stretch, 0);
    for (unsigned j = 0; j < m; ++j) rec[j * stretch + stretch - 1] = base[j];
    std::vector<long> init{1};
    for (unsigned j = 1; j < rec.size(); ++j) init.push_back(init.back() + 1 + long(rng() % 4));
    PositionalSystem s = fixtures::make(rec, init);
    try {
      if (s.term(80) < (1L << 20)) continue;
    } catch (const NotIncreasing&) {
      continue;
    }
    out.push_back({"random" + std::to_string(out.size()), s});
  }
  return out;
}

inline const std::vector<Case>& cases() {
  static const std::vector<Case> c = [] {
    std::vector<Case> v;
    for (const auto& f : fixtures::all()) v.push_back({f.name, fixtures::system(f.name)});
    for (auto& r : random_systems()) v.push_back(std::move(r));
    return v;
  }();
  return c;
}

inline const AnalysisReport& report_of(const Case& c) {
  static std::map<std::string, std::unique_ptr<AnalysisReport>> cache;
  auto it = cache.find(c.name);
  if (it == cache.end()) {
    AnalysisBudgets b;
    b.exhaustive = true;
    b.expansion.steps = 1500;
    it = cache.emplace(c.name, std::make_unique<AnalysisReport>(analyze(c.sys, b))).first;
  }
  return *it->second;
}

inline Integer ref_delta_i(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, long n) {
  long N = n * long(p) - long(rec.shift);
  Integer v = sys.term(N);
  for (std::size_t l = 1; l <= rec.length(); ++l) v -= Integer(rec.digit(l - 1)) * sys.term(N - long(l));
  return v;
}

inline Integer ref_delta_iqm(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, std::size_t q,
                             std::size_t m, long n) {
  long N = n * long(p) - long(rec.shift);
  Integer a = sys.term(N), b = sys.term(N - long(m));
  for (std::size_t l = 1; l <= q + m; ++l) a -= Integer(rec.digit(l - 1)) * sys.term(N - long(l));
  for (std::size_t l = 1; l <= q; ++l) b -= Integer(rec.digit(l - 1)) * sys.term(N - long(m) - long(l));
  return a - b;
}

template <class... T>
std::string say(const T&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

inline std::string greedy_round_trip(const Case& c, unsigned seed) {
  Integer top = c.sys.term(12);
  gmp_randclass r(gmp_randinit_default);
  r.seed(seed);
  for (int k = 0; k < 40; ++k) {
    Integer x = r.get_z_range(top);
    FiniteWord w = rep(c.sys, x);
    if (val(c.sys, w) != x) return say("val(rep(", x, ")) differs");
    if (!is_greedy(c.sys, w)) return say("rep(", x, ") = ", w.str(), " is not greedy");
    if (!w.empty() && w[0] == 0) return say("rep(", x, ") has a leading zero");
    if (w.size() > 12) return say("rep(", x, ") is longer than 12");
  }
  return "";
}

// Skipped (returns "") when the language up to length 5 is too large to enumerate.
inline std::string suffix_closure(const Case& c) {
  if (c.sys.term(5) > 20000) return "";
  std::set<FiniteWord> lang = oracle_language(c.sys, 5);
  for (const auto& w : lang)
    for (std::size_t k = 0; k < w.size(); ++k)
      if (!lang.count(w.suffix(k))) return say(w.str(), " has a suffix outside the language");
  return "";
}

inline std::string delta_telescoping(const Case& c) {
  const AnalysisReport& r = report_of(c);
  if (!r.base || r.base->degenerate()) return "";
  const unsigned p = r.base->p;
  for (unsigned i = 0; i < r.expansions.size(); ++i) {
    const ExpansionRecord& rec = r.expansions[i];
    if (!rec.infinite()) continue;
    std::size_t q0 = rec.preperiod.size(), m0 = rec.period.size() * p;
    for (unsigned k = 1; k <= 3; ++k) {
      long n0 = long((q0 + k * m0 + rec.shift) / p) + 2;
      for (long n = n0; n < n0 + 8; ++n) {
        Integer sum = 0;
        for (unsigned l = 0; l < k; ++l) sum += ref_delta_iqm(c.sys, p, rec, q0, m0, n - long(l * m0 / p));
        if (ref_delta_iqm(c.sys, p, rec, q0 + 1, k * m0, n) != sum)
          return say("vertex ", i, " k=", k, " n=", n, ": q-independence fails");
        if (delta_iqm(c.sys, p, rec, q0, k * m0, n) != sum) return say("vertex ", i, " k=", k, " n=", n);
      }
    }
  }
  return "";
}

// Each positive certificate is re-derived from the terms, far beyond the fitting window.
inline std::string certificate_replay(const Case& c) {
  const AnalysisReport& r = report_of(c);
  if (!r.graph || r.base->degenerate()) return "";
  const unsigned p = r.base->p;
  const SuccessorGraph& g = *r.graph;
  for (const auto& v : r.vertices) {
    const Certificate& cert = v.cert;
    const ExpansionRecord& rec = r.expansions[v.vertex];
    if (cert.rule == "ultimately-zero" && v.result == Verdict::Regular) {
      long n0 = long((cert.q0 + cert.k * cert.m0 + rec.shift) / p) + 150;
      for (long n = n0; n < n0 + 6; ++n)
        if (ref_delta_iqm(c.sys, p, rec, cert.q0, cert.k * cert.m0, n) != 0)
          return say("vertex ", v.vertex, ": Delta not zero at n=", n);
    } else if (cert.rule == "periodic-delta" && !cert.constants.empty()) {
      std::size_t M = cert.constants.size();
      for (long n = 240; n < 240 + 2 * long(M); ++n)
        if (ref_delta_i(c.sys, p, rec, n) != cert.constants[n % M])
          return say("vertex ", v.vertex, ": constant differs at n=", n);
    } else if (cert.rule == "cycle-sum") {
      unsigned root = cert.target;
      unsigned J = static_cast<unsigned>(cert.M_prime) * cert.r;
      if (cert.cycle_row.size() != cert.M) return say("vertex ", v.vertex, ": cycle row has the wrong size");
      for (unsigned long e = 0; e < cert.M; ++e) {
        long n = long(cert.M) * 60 + long(e);
        Integer sum = 0;
        for (unsigned h = 0; h < J; ++h)
          sum += ref_delta_i(c.sys, p, r.expansions[g.sigma_pow(root, h)], n - g.m(root, h));
        if (sum != cert.cycle_row[e]) return say("vertex ", v.vertex, ": cycle row differs at e=", e);
        if (v.result == Verdict::Regular && sgn(sum) < 0) return say("vertex ", v.vertex, ": negative cycle sum");
      }
    }
  }
  return "";
}

// Compilation is exponential in the worst case. Only systems whose certified length period and quasi-greedy
// prefix-plus-period lengths are all at most 24 are compiled.
inline bool small_structure(const AnalysisReport& r) {
  if (r.length_period() > 24) return false;
  for (const auto& q : r.quasi_greedy)
    if (q.prefix.size() + q.period.size() > 24) return false;
  return true;
}

// Minimization idempotence, oracle agreement to length 12 and count(n) = U_n up to 30.
inline std::string compiled_matches_oracle(const Case& c) {
  const AnalysisReport& r = report_of(c);
  MaxWordsDecomposition m = decompose_max_words(c.sys, r);
  Dfa d = compile(m, c.sys);
  Dfa again = minimize(d);
  if (again.delta != d.delta || again.accepting != d.accepting) return "minimize is not idempotent";
  std::string diff = diff_with_oracle(d, c.sys, 12);
  if (!diff.empty()) return diff;
  for (std::size_t n = 0; n <= 30; ++n)
    if (d.count(n) != c.sys.term(n)) return say("count(", n, ") differs from U_", n);
  return "";
}

}  // namespace props
