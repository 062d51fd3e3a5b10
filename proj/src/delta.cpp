#include "numsys/delta.hpp"

#include <algorithm>
#include <numeric>

#include "numsys/algebra/sequence.hpp"

namespace numsys {

using namespace algebra;

long DeltaSeq::first_index() const {
  long need = static_cast<long>(offset() + i);
  long n = (need + p - 1) / static_cast<long>(p);
  return std::max(n, 1L);
}

Integer DeltaSeq::value_at(long n) const {
  if (n < first_index()) throw UndefinedIndex(label() + " is undefined at n = " + std::to_string(n));
  const long base = n * static_cast<long>(p) - static_cast<long>(i);
  auto U = [&](long k) { return sys->term(static_cast<std::size_t>(k)); };
  auto head = [&](long top, std::size_t len) {
    Integer v = U(top);
    for (std::size_t l = 1; l <= len; ++l) v -= Integer(t[l - 1]) * U(top - static_cast<long>(l));
    return v;
  };
  if (kind == Kind::FiniteVertex) return head(base, t.size());
  return head(base, q + m) - head(base - static_cast<long>(m), q);
}

std::string DeltaSeq::label() const {
  if (kind == Kind::FiniteVertex) return "Delta_" + std::to_string(i);
  return "Delta_{" + std::to_string(i) + "," + std::to_string(q) + "," + std::to_string(m) + "}";
}

DeltaSeq make_delta_iqm(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, std::size_t q,
                        std::size_t m) {
  if (!rec.infinite()) throw UndefinedIndex("Delta_{i,q,m} needs an infinite expansion");
  if (m == 0) throw UndefinedIndex("Delta_{i,q,m} needs m >= 1");
  DeltaSeq s;
  s.kind = DeltaSeq::Kind::InfiniteVertex;
  s.sys = &sys;
  s.p = p;
  s.i = rec.shift;
  s.q = q;
  s.m = m;
  for (std::size_t k = 0; k < q + m; ++k) s.t.push_back(rec.digit(k));
  return s;
}

DeltaSeq make_delta_i(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec) {
  if (!rec.finite()) throw UndefinedIndex("Delta_i needs a finite expansion");
  DeltaSeq s;
  s.sys = &sys;
  s.p = p;
  s.i = rec.shift;
  s.t = rec.preperiod;
  return s;
}

Integer delta_iqm(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, std::size_t q, std::size_t m,
                  long n) {
  return make_delta_iqm(sys, p, rec, q, m).value_at(n);
}

Integer delta_i(const PositionalSystem& sys, unsigned p, const ExpansionRecord& rec, long n) {
  return make_delta_i(sys, p, rec).value_at(n);
}

std::string to_string(Behaviour b) {
  switch (b) {
    case Behaviour::UltimatelyZero: return "ultimately-zero";
    case Behaviour::UltimatelyPeriodic: return "ultimately-periodic";
    case Behaviour::LinearDrift: return "linear-drift";
    case Behaviour::Irregular: return "irregular";
  }
  return "?";
}

PeriodicityReport classify(const DeltaSeq& seq, std::size_t fit_window) {
  PeriodicityReport rep;
  const std::size_t order = seq.sys->order();
  std::size_t w = fit_window ? fit_window : 4 * order;
  w = std::max(w, 2 * order + 2);
  const long start =
      static_cast<long>(order) + static_cast<long>((seq.offset() + seq.i + seq.p - 1) / seq.p) + 2;

  std::vector<Integer> vals;
  for (std::size_t k = 0; k < 2 * w; ++k) vals.push_back(seq.value_at(start + static_cast<long>(k)));
  std::vector<Integer> fit(vals.begin(), vals.begin() + w);
  try {
    rep.minimal_polynomial = min_poly_of_sequence(fit, 0, order);
  } catch (const NoRecurrenceFound& e) {
    rep.note = std::string("no recurrence fits the window: ") + e.what();
    return rep;
  }
  if (!annihilates(rep.minimal_polynomial, vals, 0)) {
    rep.note = "fitted recurrence fails on the verification window";
    return rep;
  }
  rep.from = start;
  if (rep.minimal_polynomial.degree() <= 0) {
    rep.status = Behaviour::UltimatelyZero;
    return rep;
  }
  rep.profile = cyclotomic_profile(rep.minimal_polynomial);
  rep.from = start + rep.profile.power_of_x;
  if (!rep.profile.only_unit_roots()) {
    rep.note = "eigenvalue that is neither zero nor a root of unity";
    return rep;
  }
  if (rep.profile.unit_root_orders.empty()) {
    rep.status = Behaviour::UltimatelyZero;
    return rep;
  }
  const unsigned mult = rep.profile.max_unit_multiplicity();
  rep.period = rep.profile.order_lcm();
  if (mult > 2) {
    rep.note = "root of unity of multiplicity " + std::to_string(mult);
    return rep;
  }
  const unsigned long M = rep.period;

  // Second window, disjoint from the fitting one, of at least 3M terms.
  const long lo = std::max(rep.from, start + static_cast<long>(w));
  const long hi = lo + static_cast<long>(std::max<std::size_t>(2 * w, 3 * M)) + static_cast<long>(M);
  std::vector<Integer> win;
  for (long n = rep.from; n < hi + static_cast<long>(M); ++n) win.push_back(seq.value_at(n));
  auto at = [&](long n) -> const Integer& { return win[static_cast<std::size_t>(n - rep.from)]; };

  if (mult == 1) {
    rep.constants.assign(M, 0);
    for (unsigned long e = 0; e < M; ++e) {
      long n = rep.from + static_cast<long>((e + M - rep.from % M) % M);
      rep.constants[e] = at(n);
    }
    for (long n = lo; n < hi; ++n)
      if (at(n) != rep.constants[n % M]) {
        rep.note = "periodicity check failed at n = " + std::to_string(n);
        return rep;
      }
    rep.status = rep.constants == std::vector<Integer>(M, 0) ? Behaviour::UltimatelyZero : Behaviour::UltimatelyPeriodic;
    if (rep.status == Behaviour::UltimatelyZero) rep.period = 1, rep.constants = {0};
    return rep;
  }

  rep.slopes.assign(M, 0);
  for (unsigned long e = 0; e < M; ++e) {
    long n = rep.from + static_cast<long>((e + M - rep.from % M) % M);
    rep.slopes[e] = at(n + static_cast<long>(M)) - at(n);
  }
  for (long n = lo; n < hi; ++n)
    if (at(n + static_cast<long>(M)) - at(n) != rep.slopes[(n + static_cast<long>(M)) % M]) {
      rep.note = "drift check failed at n = " + std::to_string(n);
      return rep;
    }
  rep.status = Behaviour::LinearDrift;
  return rep;
}

std::optional<unsigned long> ultimate_zero_k(const PeriodicityReport& rep, std::size_t m0, unsigned p) {
  if (m0 == 0 || m0 % p) throw std::invalid_argument("ultimate_zero_k: m0 must be a positive multiple of p");
  if (rep.status == Behaviour::UltimatelyZero) return 1;
  if (rep.status != Behaviour::UltimatelyPeriodic) return std::nullopt;
  const unsigned long a = m0 / p;
  unsigned long k = 1;
  for (auto [d, mult] : rep.profile.unit_root_orders) {
    if (mult > 1 || a % d == 0) return std::nullopt;
    k = std::lcm(k, d / std::gcd<unsigned long>(d, a));
  }
  return k;
}

namespace {

long first_block(const DeltaSeq& seq, const PeriodicityReport& rep, unsigned long M, unsigned long e, long shift) {
  long need = std::max(rep.from, seq.first_index()) + shift - static_cast<long>(e);
  long Ml = static_cast<long>(M);
  long n = need <= 0 ? 0 : (need + Ml - 1) / Ml;
  return n + 1;
}

}  // namespace

Integer ultimate_value(const DeltaSeq& seq, const PeriodicityReport& rep, unsigned long M, unsigned long e,
                       long shift) {
  if (!rep.periodic() || M % rep.period)
    throw NotPeriodic(seq.label() + " is not ultimately periodic with period dividing " + std::to_string(M));
  long n = first_block(seq, rep, M, e, shift);
  long Ml = static_cast<long>(M), el = static_cast<long>(e);
  Integer v = seq.value_at(n * Ml + el - shift);
  if (seq.value_at((n + 1) * Ml + el - shift) != v)
    throw NotPeriodic(seq.label() + ": ultimate value differs one period later");
  return v;
}

Integer ultimate_increment(const DeltaSeq& seq, const PeriodicityReport& rep, unsigned long M, unsigned long e,
                           long shift) {
  if (!rep.drift_stable() || M % rep.period)
    throw NotPeriodic(seq.label() + " has no periodic increment with period " + std::to_string(M));
  long n = first_block(seq, rep, M, e, shift) + 1;
  long Ml = static_cast<long>(M), el = static_cast<long>(e);
  auto inc = [&](long b) { return Integer(seq.value_at(b * Ml + el - shift) - seq.value_at((b - 1) * Ml + el - shift)); };
  Integer g = inc(n);
  if (inc(n + 1) != g) throw NotPeriodic(seq.label() + ": increment differs one period later");
  return g;
}

CumulativeTable cumulative_constants(const SuccessorGraph& graph, const std::vector<std::optional<DeltaSeq>>& deltas,
                                     const std::vector<std::optional<PeriodicityReport>>& reports, unsigned i,
                                     unsigned long M, unsigned J) {
  CumulativeTable t;
  t.M = M;
  t.partial.push_back(std::vector<Integer>(M, 0));
  unsigned v = i;
  std::size_t k = 0;
  for (unsigned j = 0; j < J; ++j) {
    if (!deltas[v] || !reports[v]) throw NotPeriodic("no Delta sequence at vertex " + std::to_string(v));
    long m = (static_cast<long>(i) + static_cast<long>(k) - static_cast<long>(v)) / static_cast<long>(graph.p);
    std::vector<Integer> row(M);
    for (unsigned long e = 0; e < M; ++e) row[e] = ultimate_value(*deltas[v], *reports[v], M, e, m);
    std::vector<Integer> next = t.partial.back();
    for (unsigned long e = 0; e < M; ++e) next[e] += row[e];
    t.single.push_back(std::move(row));
    t.partial.push_back(std::move(next));
    if (!graph.successor[v]) {
      if (j + 1 < J) throw UndefinedIntermediate("sigma-orbit ends before depth " + std::to_string(J));
      break;
    }
    k += graph.lengths[v];
    v = *graph.successor[v];
  }
  return t;
}

std::vector<std::vector<Integer>> gamma_constants(const SuccessorGraph& graph,
                                                  const std::vector<std::optional<DeltaSeq>>& deltas,
                                                  const std::vector<std::optional<PeriodicityReport>>& reports,
                                                  unsigned i, unsigned long M, unsigned s) {
  std::vector<std::vector<Integer>> out;
  unsigned v = i;
  std::size_t k = 0;
  for (unsigned j = 0; j < s; ++j) {
    if (!deltas[v] || !reports[v]) throw NotPeriodic("no Delta sequence at vertex " + std::to_string(v));
    long m = (static_cast<long>(i) + static_cast<long>(k) - static_cast<long>(v)) / static_cast<long>(graph.p);
    std::vector<Integer> row(M);
    for (unsigned long e = 0; e < M; ++e) row[e] = ultimate_increment(*deltas[v], *reports[v], M, e, m);
    out.push_back(std::move(row));
    if (!graph.successor[v]) break;
    k += graph.lengths[v];
    v = *graph.successor[v];
  }
  return out;
}

Integer cumulative_value(const SuccessorGraph& graph, const std::vector<std::optional<DeltaSeq>>& deltas, unsigned i,
                         unsigned j, long n) {
  Integer sum = 0;
  unsigned v = i;
  std::size_t k = 0;
  for (unsigned h = 0; h < j; ++h) {
    if (!deltas[v]) throw UndefinedIntermediate("no Delta sequence at vertex " + std::to_string(v));
    long m = (static_cast<long>(i) + static_cast<long>(k) - static_cast<long>(v)) / static_cast<long>(graph.p);
    sum += deltas[v]->value_at(n - m);
    if (!graph.successor[v]) break;
    k += graph.lengths[v];
    v = *graph.successor[v];
  }
  return sum;
}

}  // namespace numsys
