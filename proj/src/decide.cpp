#include "numsys/decide.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace numsys {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Regular: return "REGULAR";
    case Verdict::NotRegular: return "NOT_REGULAR";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

unsigned long AnalysisReport::length_period() const {
  unsigned long l = 1;
  for (auto v : vertex_period) l = std::lcm(l, std::max(v, 1UL));
  return l * (base ? base->p : 1);
}

namespace {

std::string describe(const DeltaSeq& s, const PeriodicityReport& r) {
  std::string out = s.label() + ": " + to_string(r.status);
  if (r.status == Behaviour::UltimatelyPeriodic || r.status == Behaviour::LinearDrift)
    out += " (period " + std::to_string(r.period) + ")";
  if (!r.note.empty()) out += " [" + r.note + "]";
  return out;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

Decider::Decider(const PositionalSystem& sys, const AlternateBase& base, const std::vector<ExpansionRecord>& records,
                 const SuccessorGraph& graph, std::size_t fit_window)
    : sys_(sys), base_(base), records_(records), graph_(graph), fit_window_(fit_window),
      deltas_(graph.p), reports_(graph.p), period_(graph.p, 1) {}

void Decider::ensure(unsigned i) {
  if (deltas_[i]) return;
  deltas_[i] = make_delta_i(sys_, base_.p, records_[i]);
  reports_[i] = classify(*deltas_[i], fit_window_);
}

const DeltaSeq& Decider::delta(unsigned i) {
  ensure(i);
  return *deltas_[i];
}

const PeriodicityReport& Decider::report(unsigned i) {
  ensure(i);
  return *reports_[i];
}

VertexVerdict Decider::decide_no_successor(unsigned i) {
  VertexVerdict v;
  v.vertex = i;
  v.category = Category::NoSuccessor;
  const auto& rec = records_[i];
  const std::size_t q0 = rec.preperiod.size();
  const std::size_t m0 = std::lcm(rec.period.size(), static_cast<std::size_t>(base_.p));
  DeltaSeq seq = make_delta_iqm(sys_, base_.p, rec, q0, m0);
  PeriodicityReport rep = classify(seq, fit_window_);
  v.cert.rule = "ultimately-zero";
  v.cert.q0 = q0;
  v.cert.m0 = m0;
  v.cert.sequences.push_back(describe(seq, rep));
  v.cert.minimal_polynomial = algebra::to_string(rep.minimal_polynomial);
  v.cert.profile = algebra::to_string(rep.profile);
  if (rep.periodic()) v.cert.constants = rep.constants;
  auto k = ultimate_zero_k(rep, m0, base_.p);
  if (k) {
    v.result = Verdict::Regular;
    v.cert.k = *k;
    period_[i] = *k * (m0 / base_.p);
    v.reason = "Delta_{i,q0,k*m0} is ultimately zero for k = " + std::to_string(*k);
  } else {
    v.result = Verdict::NotRegular;
    if (rep.status == Behaviour::UltimatelyPeriodic && rep.profile.max_unit_multiplicity() > 1)
      v.reason = "a root of unity of multiplicity > 1 prevents Delta_{i,q0,k*m0} from vanishing";
    else if (rep.status == Behaviour::UltimatelyPeriodic)
      v.reason = "an eigenvalue of Delta_{i,q0,m0} has order dividing m0/p, so no Delta_{i,q0,k*m0} vanishes";
    else
      v.reason = "Delta_{i,q0,m0} is not ultimately periodic, so no Delta_{i,q0,k*m0} vanishes";
  }
  return v;
}

VertexVerdict Decider::decide_leads_no_successor(unsigned i) {
  VertexVerdict v;
  v.vertex = i;
  v.category = Category::LeadsToNoSuccessor;
  const auto& cls = graph_.classes[i];
  v.cert.rule = "periodic-delta";
  v.cert.s = cls.distance;
  v.cert.target = cls.target;
  const auto& rep = report(i);
  v.cert.sequences.push_back(describe(delta(i), rep));
  v.cert.minimal_polynomial = algebra::to_string(rep.minimal_polynomial);
  v.cert.profile = algebra::to_string(rep.profile);
  if (rep.periodic()) {
    v.result = Verdict::Regular;
    v.cert.M = rep.period;
    v.cert.constants = rep.constants;
    unsigned long per = rep.period;
    if (graph_.successor[i]) per = std::lcm(per, period_[*graph_.successor[i]]);
    period_[i] = per;
    v.reason = "Delta_i is ultimately periodic";
  } else {
    v.result = Verdict::NotRegular;
    v.reason = "Delta_i is not ultimately periodic";
  }
  return v;
}

std::vector<VertexVerdict> Decider::decide_cycle(unsigned root) {
  std::vector<unsigned> cyc = graph_.cycle_from(root);
  const unsigned r = static_cast<unsigned>(cyc.size());
  Certificate cert;
  cert.rule = "cycle-sum";
  cert.r = r;
  cert.target = root;
  bool all_periodic = true;
  unsigned long M = 1;
  for (unsigned v : cyc) {
    const auto& rep = report(v);
    cert.sequences.push_back(describe(delta(v), rep));
    if (!rep.periodic()) all_periodic = false;
    else M = std::lcm(M, rep.period);
  }
  cert.minimal_polynomial = algebra::to_string(report(root).minimal_polynomial);
  cert.profile = algebra::to_string(report(root).profile);

  Verdict result;
  std::string reason;
  if (!all_periodic) {
    result = Verdict::NotRegular;
    reason = "a Delta sequence along the cycle is not ultimately periodic";
  } else {
    const std::size_t k = graph_.k(root, r);
    const unsigned long kp = k / base_.p;
    M = std::lcm(M, kp);
    const unsigned long Mp = M * base_.p / k;
    cert.M = M;
    cert.M_prime = Mp;
    cert.constants = report(root).constants;
    const unsigned depth = static_cast<unsigned>(Mp * r);
    CumulativeTable t = cumulative_constants(graph_, deltas_, reports_, root, M, depth);
    cert.cycle_row = t.partial.back();
    // Shift identity along the cycle.
    for (unsigned j = 1; j < r && cert.shift_identity; ++j) {
      unsigned w = cyc[j];
      CumulativeTable tw = cumulative_constants(graph_, deltas_, reports_, w, M, depth);
      long mij = graph_.m(root, j);
      for (unsigned long e = 0; e < M; ++e)
        if (cert.cycle_row[e] != tw.partial.back()[mod(static_cast<long>(e) - mij, static_cast<long>(M))])
          cert.shift_identity = false;
    }
    bool ok = true;
    for (unsigned long e = 0; e < kp; ++e)
      if (cert.cycle_row[e] < 0) ok = false;
    if (!cert.shift_identity) {
      result = Verdict::Unknown;
      reason = "internal cross-check failed: cumulative sums are not shift invariant along the cycle";
    } else if (ok) {
      result = Verdict::Regular;
      reason = "all cumulative sums Delta^(M'r)_{i,e} are nonnegative";
    } else {
      result = Verdict::NotRegular;
      reason = "a cumulative sum Delta^(M'r)_{i,e} is negative";
    }
  }
  std::vector<VertexVerdict> out;
  for (unsigned v : cyc) {
    VertexVerdict vv;
    vv.vertex = v;
    vv.category = Category::InCycle;
    vv.result = result;
    vv.cert = cert;
    vv.reason = reason;
    if (result == Verdict::Regular) period_[v] = cert.M;
    out.push_back(std::move(vv));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  return out;
}

VertexVerdict Decider::decide_leads_cycle(unsigned i) {
  VertexVerdict v;
  v.vertex = i;
  v.category = Category::LeadsToCycle;
  const auto& cls = graph_.classes[i];
  const unsigned s = cls.distance, r = cls.cycle_length, c = cls.target;
  v.cert.rule = "drift-match";
  v.cert.s = s;
  v.cert.r = r;
  v.cert.target = c;
  const auto& rep = report(i);
  v.cert.sequences.push_back(describe(delta(i), rep));
  v.cert.minimal_polynomial = algebra::to_string(rep.minimal_polynomial);
  v.cert.profile = algebra::to_string(rep.profile);
  if (!rep.drift_stable()) {
    v.result = Verdict::NotRegular;
    v.reason = "Delta_i has an eigenvalue that is not a root of unity of multiplicity at most 2";
    return v;
  }
  unsigned long M = 1;
  for (unsigned j = 0; j < s; ++j) {
    const auto& rj = report(graph_.sigma_pow(i, j));
    if (!rj.drift_stable()) {
      v.result = Verdict::Unknown;
      v.reason = "a vertex on the path has an unstable Delta";
      return v;
    }
    M = std::lcm(M, rj.period);
  }
  for (unsigned j = 0; j < r; ++j) {
    const auto& rj = report(graph_.sigma_pow(c, j));
    if (!rj.periodic()) {
      v.result = Verdict::Unknown;
      v.reason = "the cycle reached is not regular";
      return v;
    }
    M = std::lcm(M, rj.period);
  }
  const std::size_t kc = graph_.k(c, r);
  M = std::lcm(M, static_cast<unsigned long>(kc / base_.p));
  const unsigned long Mp = M * base_.p / kc;
  v.cert.M = M;
  v.cert.M_prime = Mp;
  v.cert.m_is = graph_.m(i, s);
  v.cert.gamma = gamma_constants(graph_, deltas_, reports_, i, M, s);
  CumulativeTable t = cumulative_constants(graph_, deltas_, reports_, c, M, static_cast<unsigned>(Mp * r));
  v.cert.cycle_row = t.partial.back();
  bool ok = true;
  std::string bad;
  for (unsigned long e = 0; e < M && ok; ++e) {
    const Integer& g = v.cert.gamma[0][e];
    if (g == 0) continue;
    long ep = mod(static_cast<long>(e) - v.cert.m_is, static_cast<long>(M));
    bool match = g < 0 && g == -v.cert.cycle_row[ep];
    for (unsigned j = 1; j < s && match; ++j) match = v.cert.gamma[j][e] == 0;
    if (!match) {
      ok = false;
      bad = "residue e = " + std::to_string(e) + ": Gamma_{i,e,0} = " + g.get_str() +
            " while -Delta^(M'r)_{sigma^s(i),e'} = " + Integer(-v.cert.cycle_row[ep]).get_str();
    }
  }
  if (ok) {
    v.result = Verdict::Regular;
    v.reason = "every drift Gamma_{i,e,0} is zero or cancels the cycle sum";
    period_[i] = M;
  } else {
    v.result = Verdict::NotRegular;
    v.reason = bad;
  }
  return v;
}

AnalysisReport analyze(const PositionalSystem& sys, const AnalysisBudgets& budgets) {
  AnalysisReport rep(sys);
  rep.budgets = budgets;
  BaseResult br = extract_base(rep.system, budgets.p_bound);
  if (auto* f = std::get_if<BaseFailure>(&br)) {
    rep.base_failure = *f;
    if (f->kind == BaseFailureKind::NotRhoXiStructure) {
      rep.overall = Verdict::NotRegular;
      rep.notes.push_back("the limits U_{np-i}/U_{np-i-1} cannot exist: " + f->reason);
    } else {
      rep.overall = Verdict::Unknown;
      rep.notes.push_back("base extraction failed: " + f->reason);
    }
    return rep;
  }
  rep.base = std::get<AlternateBase>(br);
  const AlternateBase& base = *rep.base;
  const unsigned p = base.p;
  rep.expansions = expand_all(base, budgets.expansion);
  bool all_resolved = true;
  for (const auto& r : rep.expansions)
    if (!r.resolved()) {
      all_resolved = false;
      rep.notes.push_back("expansion d_" + std::to_string(r.shift) + " unresolved: " + r.note);
    }
  if (all_resolved) rep.quasi_greedy = quasi_greedy(rep.expansions);
  rep.graph = build_graph(rep.expansions, true);
  const SuccessorGraph& g = *rep.graph;
  rep.vertex_period.assign(p, 1);
  rep.vertices.resize(p);
  for (unsigned i = 0; i < p; ++i) {
    rep.vertices[i].vertex = i;
    rep.vertices[i].category = g.classes[i].category;
  }

  Decider dec(rep.system, base, rep.expansions, g, budgets.fit_window);
  std::vector<bool> done(p, false);
  bool stopped = false;
  auto record = [&](const VertexVerdict& v) {
    rep.vertices[v.vertex] = v;
    done[v.vertex] = true;
    if (v.result == Verdict::NotRegular && !rep.witness) rep.witness = v.vertex;
    if (v.result == Verdict::NotRegular && !budgets.exhaustive) stopped = true;
  };
  auto prerequisite_ok = [&](unsigned i, VertexVerdict& out) {
    // Every vertex reached from i must already be Regular.
    unsigned v = i;
    for (unsigned step = 0; step <= p; ++step) {
      if (!g.successor[v]) break;
      v = *g.successor[v];
      if (v == i) break;
      const auto& vv = rep.vertices[v];
      if (!done[v] || vv.result != Verdict::Regular) {
        out.vertex = i;
        out.category = g.classes[i].category;
        out.result = Verdict::Unknown;
        out.cert.rule = "prerequisite";
        out.cert.target = v;
        out.reason = "vertex " + std::to_string(v) + " reached from here is " +
                     (done[v] ? to_string(vv.result) : std::string("undecided")) +
                     "; L_i may or may not be regular";
        return false;
      }
      if (g.classes[v].category == Category::InCycle && g.classes[i].category == Category::LeadsToCycle &&
          v == g.classes[i].target)
        break;
    }
    return true;
  };

  for (unsigned i = 0; i < p; ++i)
    if (g.classes[i].category == Category::Unknown) {
      VertexVerdict v;
      v.vertex = i;
      v.category = Category::Unknown;
      v.cert.rule = "unresolved";
      v.reason = "the expansions reached from this vertex were not resolved within budget";
      record(v);
    }
  for (unsigned i = 0; i < p && !stopped; ++i)
    if (g.classes[i].category == Category::NoSuccessor) record(dec.decide_no_successor(i));
  std::set<unsigned> roots;
  for (unsigned i = 0; i < p; ++i)
    if (g.classes[i].category == Category::InCycle) {
      auto cyc = g.cycle_from(i);
      roots.insert(*std::min_element(cyc.begin(), cyc.end()));
    }
  for (unsigned root : roots) {
    if (stopped) break;
    for (const auto& v : dec.decide_cycle(root)) record(v);
  }
  std::map<unsigned, std::vector<unsigned>> by_distance;
  for (unsigned i = 0; i < p; ++i) {
    auto c = g.classes[i].category;
    if (c == Category::LeadsToNoSuccessor || c == Category::LeadsToCycle) by_distance[g.classes[i].distance].push_back(i);
  }
  for (const auto& [dist, vs] : by_distance)
    for (unsigned i : vs) {
      if (stopped) break;
      VertexVerdict pre;
      if (!prerequisite_ok(i, pre)) {
        record(pre);
        continue;
      }
      record(g.classes[i].category == Category::LeadsToNoSuccessor ? dec.decide_leads_no_successor(i)
                                                                    : dec.decide_leads_cycle(i));
    }
  for (unsigned i = 0; i < p; ++i)
    if (!done[i]) {
      rep.vertices[i].result = Verdict::Unknown;
      rep.vertices[i].cert.rule = "not-examined";
      rep.vertices[i].reason = "not examined: the procedure stops at the first non-regular vertex";
    }
  for (unsigned i = 0; i < p; ++i) rep.vertex_period[i] = dec.vertex_period(i);

  bool any_not = false, all_reg = true;
  for (const auto& v : rep.vertices) {
    any_not = any_not || v.result == Verdict::NotRegular;
    all_reg = all_reg && v.result == Verdict::Regular;
  }
  rep.overall = any_not ? Verdict::NotRegular : all_reg ? Verdict::Regular : Verdict::Unknown;
  if (base.degenerate()) rep.notes.push_back("all limits equal 1; regularity reduces to periodicity of U_{n+1} - U_n");
  return rep;
}

}  // namespace numsys
