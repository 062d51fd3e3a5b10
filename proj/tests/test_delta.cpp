#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"

using namespace numsys;

namespace {

struct Pipeline {
  PositionalSystem sys;
  AlternateBase base;
  std::vector<ExpansionRecord> recs;
  SuccessorGraph graph;

  explicit Pipeline(const std::string& name)
      : sys(fixtures::system(name)),
        base(std::get<AlternateBase>(extract_base(sys))),
        recs(expand_all(base)),
        graph(build_graph(recs)) {}
};

// Reference formulas, evaluated directly on the terms.
Integer ref_delta_i(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, long n) {
  long N = n * long(p) - long(rec.shift);
  Integer v = sys.term(N);
  for (std::size_t l = 1; l <= rec.length(); ++l) v -= Integer(rec.digit(l - 1)) * sys.term(N - long(l));
  return v;
}

Integer ref_delta_iqm(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, std::size_t q,
                      std::size_t m, long n) {
  long N = n * long(p) - long(rec.shift);
  Integer a = sys.term(N), b = sys.term(N - long(m));
  for (std::size_t l = 1; l <= q + m; ++l) a -= Integer(rec.digit(l - 1)) * sys.term(N - long(l));
  for (std::size_t l = 1; l <= q; ++l) b -= Integer(rec.digit(l - 1)) * sys.term(N - long(m) - long(l));
  return a - b;
}

}  // namespace

TEST(DeltaSeq, FiniteVertexMatchesDefinition) {
  for (const char* name : {"five_vertices", "loop_with_tail", "double_unit_roots", "three_and_one_regular"}) {
    Pipeline s(name);
    for (unsigned i = 0; i < s.base.p; ++i) {
      if (!s.recs[i].finite()) continue;
      DeltaSeq d = make_delta_i(s.sys, s.base.p, s.recs[i]);
      for (long n = d.first_index(); n < d.first_index() + 30; ++n)
        EXPECT_EQ(d.value_at(n), ref_delta_i(s.sys, s.base.p, s.recs[i], n)) << name << " i=" << i << " n=" << n;
    }
  }
}

TEST(DeltaSeq, InfiniteVertexMatchesDefinition) {
  for (const char* name : {"two_piece_max_words", "chain_to_infinite", "tail_pair_a"}) {
    Pipeline s(name);
    for (unsigned i = 0; i < s.base.p; ++i) {
      if (!s.recs[i].infinite()) continue;
      std::size_t q = s.recs[i].preperiod.size(), m = s.recs[i].period.size() * s.base.p;
      DeltaSeq d = make_delta_iqm(s.sys, s.base.p, s.recs[i], q, m);
      for (long n = d.first_index(); n < d.first_index() + 30; ++n)
        EXPECT_EQ(d.value_at(n), ref_delta_iqm(s.sys, s.base.p, s.recs[i], q, m, n)) << name << " i=" << i;
    }
  }
}

// Doubling m splits into two shifted copies; raising q past the preperiod changes nothing.
TEST(DeltaSeq, TelescopingInQAndM) {
  for (const char* name : {"two_piece_max_words", "chain_to_infinite", "tail_pair_b", "sqrt13_pair"}) {
    Pipeline s(name);
    const unsigned p = s.base.p;
    for (unsigned i = 0; i < p; ++i) {
      if (!s.recs[i].infinite()) continue;
      std::size_t q0 = s.recs[i].preperiod.size();
      std::size_t m0 = s.recs[i].period.size() * p;
      for (unsigned k = 1; k <= 3; ++k)
        for (std::size_t q = q0; q <= q0 + 2; ++q) {
          DeltaSeq big = make_delta_iqm(s.sys, p, s.recs[i], q, k * m0);
          for (long n = big.first_index() + 2; n < big.first_index() + 22; ++n) {
            Integer sum = 0;
            for (unsigned l = 0; l < k; ++l) sum += delta_iqm(s.sys, p, s.recs[i], q0, m0, n - long(l * m0 / p));
            EXPECT_EQ(big.value_at(n), sum) << name << " i=" << i << " q=" << q << " k=" << k << " n=" << n;
          }
        }
    }
  }
}

TEST(Classify, ZeroPeriodicAndDrift) {
  {
    Pipeline s("base_ten");
    PeriodicityReport r = classify(make_delta_i(s.sys, 1, s.recs[0]));
    EXPECT_EQ(r.status, Behaviour::UltimatelyZero);
  }
  {
    Pipeline s("loop_with_tail");
    PeriodicityReport r = classify(make_delta_i(s.sys, s.base.p, s.recs[1]));
    EXPECT_EQ(r.status, Behaviour::UltimatelyPeriodic);
    EXPECT_EQ(r.period, 2ul);
    EXPECT_EQ(r.constants, (std::vector<Integer>{2, -1}));
  }
  {
    Pipeline s("double_unit_roots");
    PeriodicityReport r = classify(make_delta_i(s.sys, s.base.p, s.recs[1]));
    EXPECT_EQ(r.status, Behaviour::LinearDrift);
    EXPECT_EQ(r.period, 5ul);
    IntPolynomial x5m1({Integer(-1), 0, 0, 0, 0, Integer(1)});
    EXPECT_EQ(r.minimal_polynomial, x5m1 * x5m1);
  }
  {
    Pipeline s("squares");
    PeriodicityReport r = classify(make_delta_i(s.sys, 1, s.recs[0]));
    EXPECT_FALSE(r.periodic());
  }
}

// Classification re-checked against a second window far from the fitting one.
TEST(Classify, ConstantsHoldFarOut) {
  for (const auto& f : fixtures::all()) {
    const AnalysisReport& rep = fixtures::report(f.name);
    if (!rep.graph || rep.base->degenerate()) continue;
    Decider dec(rep.system, *rep.base, rep.expansions, *rep.graph);
    for (unsigned i = 0; i < rep.base->p; ++i) {
      if (!rep.expansions[i].finite()) continue;
      const PeriodicityReport& r = dec.report(i);
      if (!r.periodic()) continue;
      long from = std::max<long>(r.from, 200);
      for (long n = from; n < from + 2 * long(r.period) + 4; ++n)
        EXPECT_EQ(ref_delta_i(rep.system, rep.base->p, rep.expansions[i], n),
                  r.constants.empty() ? Integer(0) : r.constants[n % r.constants.size()])
            << f.name << " i=" << i << " n=" << n;
    }
  }
}

TEST(UltimateZeroK, ChainAndTail) {
  {
    Pipeline s("chain_to_infinite");
    DeltaSeq d = make_delta_iqm(s.sys, s.base.p, s.recs[0], 1, 3);
    PeriodicityReport r = classify(d);
    EXPECT_EQ(ultimate_zero_k(r, 3, s.base.p), 2ul);
    // Direct check: Delta_{0,1,6} vanishes far out, Delta_{0,1,3} does not.
    EXPECT_EQ(ref_delta_iqm(s.sys, s.base.p, s.recs[0], 1, 6, 150), Integer(0));
    EXPECT_NE(ref_delta_iqm(s.sys, s.base.p, s.recs[0], 1, 3, 150), Integer(0));
  }
  {
    Pipeline s("tail_pair_a");
    DeltaSeq d = make_delta_iqm(s.sys, s.base.p, s.recs[1], 1, 2);
    PeriodicityReport r = classify(d);
    EXPECT_FALSE(ultimate_zero_k(r, 2, s.base.p).has_value());
    // Delta_{1,1,2k} is ultimately -k.
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(ref_delta_iqm(s.sys, 2, s.recs[1], 1, 2 * k, 120), Integer(-long(k)));
  }
}

TEST(Cumulative, LoopCycleRows) {
  Pipeline s("loop_with_tail");
  Decider dec(s.sys, s.base, s.recs, s.graph);
  for (unsigned i = 0; i < 3; ++i) dec.report(i);
  CumulativeTable t1 = cumulative_constants(s.graph, dec.deltas(), dec.reports(), 1, 2, 2);
  EXPECT_EQ(t1.partial[2], (std::vector<Integer>{1, 0}));
  CumulativeTable t2 = cumulative_constants(s.graph, dec.deltas(), dec.reports(), 2, 2, 2);
  EXPECT_EQ(t2.partial[2][1], Integer(1));
  for (const auto* t : {&t1, &t2})
    for (std::size_t j = 0; j + 1 < t->partial.size(); ++j)
      for (std::size_t e = 0; e < 2; ++e) EXPECT_EQ(t->partial[j + 1][e] - t->partial[j][e], t->single[j][e]);
  EXPECT_EQ(t1.partial[0], (std::vector<Integer>{0, 0}));
  // Against the definition, far out.
  for (long n = 300; n < 304; ++n)
    EXPECT_EQ(cumulative_value(s.graph, dec.deltas(), 1, 2, n), t1.partial[2][n % 2]);
}

TEST(Cumulative, ShiftIdentityAlongCycle) {
  for (const char* name : {"loop_with_tail", "five_vertices", "double_unit_roots", "period_four_cycle"}) {
    Pipeline s(name);
    Decider dec(s.sys, s.base, s.recs, s.graph);
    for (unsigned i = 0; i < s.base.p; ++i) {
      if (s.graph.classes[i].category != Category::InCycle) continue;
      unsigned r = s.graph.classes[i].cycle_length;
      for (unsigned v : s.graph.cycle_from(i)) dec.report(v);
      unsigned long M = 1;
      for (unsigned v : s.graph.cycle_from(i)) M = std::lcm(M, dec.report(v).period);
      M = std::lcm(M, s.graph.k(i, r) / s.base.p);
      CumulativeTable a = cumulative_constants(s.graph, dec.deltas(), dec.reports(), i, M, r);
      for (unsigned j = 1; j < r; ++j) {
        unsigned v = s.graph.sigma_pow(i, j);
        CumulativeTable b = cumulative_constants(s.graph, dec.deltas(), dec.reports(), v, M, r);
        long mij = s.graph.m(i, j);
        for (unsigned long e = 0; e < M; ++e) {
          unsigned long e2 = static_cast<unsigned long>(((long(e) - mij) % long(M) + long(M)) % long(M));
          EXPECT_EQ(a.partial[r][e], b.partial[r][e2]) << name << " i=" << i << " j=" << j << " e=" << e;
        }
      }
    }
  }
}

TEST(Gamma, DriftSlopes) {
  {
    Pipeline s("loop_with_tail");
    Decider dec(s.sys, s.base, s.recs, s.graph);
    for (unsigned i = 0; i < 3; ++i) dec.report(i);
    auto g = gamma_constants(s.graph, dec.deltas(), dec.reports(), 0, 2, 1);
    EXPECT_EQ(g[0], (std::vector<Integer>{0, -12}));
    // Slope from the definition: (Delta_0)_{n+2} - (Delta_0)_n for odd n.
    EXPECT_EQ(ref_delta_i(s.sys, 3, s.recs[0], 401) - ref_delta_i(s.sys, 3, s.recs[0], 399), Integer(-12));
  }
  {
    Pipeline s("double_unit_roots");
    Decider dec(s.sys, s.base, s.recs, s.graph);
    for (unsigned i = 0; i < 2; ++i) dec.report(i);
    auto g = gamma_constants(s.graph, dec.deltas(), dec.reports(), 1, 5, 1);
    EXPECT_EQ(g[0], (std::vector<Integer>{0, -5, 0, 0, 0}));
    EXPECT_EQ(ref_delta_i(s.sys, 2, s.recs[1], 506) - ref_delta_i(s.sys, 2, s.recs[1], 501), Integer(-5));
  }
}
