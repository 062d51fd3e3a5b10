#include "numsys/altbase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "numsys/algebra/complex_roots.hpp"
#include "numsys/algebra/cyclotomic.hpp"
#include "numsys/algebra/sequence.hpp"

namespace numsys {

using namespace algebra;

FieldElement AlternateBase::product() const {
  FieldElement r = FieldElement::from_rational(field, 1);
  for (const auto& b : betas) r *= b;
  return r;
}

bool AlternateBase::degenerate() const {
  if (p != 1) return false;
  auto q = betas.at(0).rational_value();
  return q && *q == 1;
}

std::string to_string(BaseFailureKind k) {
  switch (k) {
    case BaseFailureKind::NotRhoXiStructure: return "NOT_RHO_XI_STRUCTURE";
    case BaseFailureKind::UnequalDominantDegrees: return "UNEQUAL_DOMINANT_DEGREES";
    case BaseFailureKind::UnsupportedField: return "UNSUPPORTED_FIELD";
    case BaseFailureKind::NoRecurrenceFound: return "NO_RECURRENCE_FOUND";
  }
  return "?";
}

unsigned long default_p_bound(unsigned degree) {
  unsigned long l = 1;
  const unsigned long cap = std::numeric_limits<unsigned long>::max() / 4;
  for (unsigned k = 1; k <= 2 * degree * degree + 2; ++k) {
    if (euler_phi(k) > degree) continue;
    l = std::lcm(l, static_cast<unsigned long>(k));
    if (l > cap) return std::numeric_limits<unsigned long>::max();
  }
  return 2 * l;
}

namespace {

BaseFailure fail(BaseFailureKind k, std::string why) { return BaseFailure{k, std::move(why)}; }

// Orders two distinct real algebraic numbers.
int compare_distinct(const RealAlgebraic& a, const RealAlgebraic& b) {
  Rational w = 1;
  for (int iter = 0; iter < 100000; ++iter) {
    RatInterval ia = a.interval_within(w), ib = b.interval_within(w);
    if (ia.hi < ib.lo) return -1;
    if (ib.hi < ia.lo) return 1;
    if (ia.lo == ia.hi && ib.lo == ib.hi) return 0;
    w /= 2;
  }
  throw std::runtime_error("compare_distinct: could not separate");
}

// Division by (X − a) of the polynomial with ascending coefficients c.
std::pair<std::vector<FieldElement>, FieldElement> synthetic_division(const std::vector<FieldElement>& c,
                                                                       const FieldElement& a) {
  std::size_t n = c.size() - 1;
  std::vector<FieldElement> q(n);
  FieldElement carry = c[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + a * carry;
  }
  return {std::move(q), carry};
}

}  // namespace

BaseResult extract_base(const PositionalSystem& sys, unsigned long p_bound) {
  try {
    const std::size_t order = sys.order();
    std::vector<Integer> u = sys.terms(4 * order + 8);
    IntPolynomial mp;
    try {
      mp = min_poly_of_sequence(u, 0, order);
    } catch (const NoRecurrenceFound& e) {
      return fail(BaseFailureKind::NoRecurrenceFound, e.what());
    }
    const std::size_t k0 = mp.valuation();
    IntPolynomial nz(std::vector<Integer>(mp.coefficients().begin() + k0, mp.coefficients().end()));
    if (nz.degree() < 1) return fail(BaseFailureKind::NotRhoXiStructure, "the sequence is ultimately zero");
    auto yun = squarefree_decomposition(nz);

    std::optional<RealAlgebraic> rho;
    unsigned mu = 0;
    for (std::size_t k = 0; k < yun.size(); ++k) {
      if (yun[k].degree() < 1) continue;
      for (const auto& r : isolate_real_roots(yun[k])) {
        if (r.compare(0) <= 0) continue;
        if (!rho || compare_distinct(r, *rho) > 0) {
          rho = r;
          mu = static_cast<unsigned>(k + 1);
        }
      }
    }
    if (!rho) return fail(BaseFailureKind::NotRhoXiStructure, "no positive real eigenvalue");

    // Moduli are compared on floating-point approximations; the conclusion is re-checked exactly below.
    const long double r = rho->approx();
    const long double tol = 1e-9L;
    std::vector<Complex> dominating;
    for (std::size_t k = 0; k < yun.size(); ++k) {
      if (yun[k].degree() < 1) continue;
      for (const Complex& a : approximate_roots(yun[k])) {
        long double mod = std::abs(a);
        if (mod > r * (1 + tol))
          return fail(BaseFailureKind::NotRhoXiStructure,
                      "an eigenvalue has modulus larger than the largest positive real eigenvalue");
        if (std::fabs(mod - r) > tol * r) continue;
        if (k + 1 > mu)
          return fail(BaseFailureKind::NotRhoXiStructure,
                      "an eigenvalue of maximal modulus has higher multiplicity than the positive one");
        if (k + 1 == mu) dominating.push_back(a);
      }
    }

    if (auto q = rho->rational_value(); q && *q == 1) {
      AlternateBase b;
      b.p = 1;
      b.field = NumberField::rationals();
      b.betas = {FieldElement::from_rational(b.field, 1)};
      b.minimal_polynomial = mp;
      b.dominant_multiplicity = mu;
      return b;
    }

    const unsigned long bound = p_bound ? p_bound : default_p_bound(static_cast<unsigned>(mp.degree()));
    const unsigned long search = std::min<unsigned long>(bound, 20000);
    unsigned long p = 1;
    for (const Complex& a : dominating) {
      Complex xi = a / r, acc = 1;
      unsigned long found = 0;
      for (unsigned long k = 1; k <= search; ++k) {
        acc *= xi;
        if (std::abs(acc - Complex(1)) < 1e-7L) {
          found = k;
          break;
        }
      }
      if (!found)
        return fail(BaseFailureKind::NotRhoXiStructure,
                    "a dominant eigenvalue is not rho times a root of unity of order <= " + std::to_string(search));
      p = std::lcm(p, found);
    }
    if (p > bound)
      return fail(BaseFailureKind::NotRhoXiStructure, "period p exceeds the search bound " + std::to_string(bound));

    const unsigned pp = static_cast<unsigned>(p);
    IntPolynomial t_full = power_transform(nz, pp);
    IntPolynomial t_sf = squarefree_part(t_full);
    RealAlgebraic theta = power_as_root_of(*rho, pp, t_sf);
    unsigned exact = multiplicity_at(power_transform(yun[mu - 1], pp), theta);
    if (exact != dominating.size())
      return fail(BaseFailureKind::NotRhoXiStructure,
                  "the eigenvalues of maximal modulus are not all of the form rho*xi with xi^p = 1");

    FieldPtr field = field_generated_by(t_sf, theta);
    FieldElement th = FieldElement::generator(field);

    // Cofactor C = T / (X − θ)^μ' kills every component of U_{np−i} except the θ one.
    std::vector<FieldElement> c;
    for (const auto& v : t_full.coefficients()) c.push_back(FieldElement::from_rational(field, Rational(v)));
    unsigned mu_prime = 0;
    while (c.size() > 1) {
      auto [q, rem] = synthetic_division(c, th);
      if (!rem.is_zero()) break;
      c = std::move(q);
      ++mu_prime;
    }
    if (mu_prime == 0) throw std::logic_error("extract_base: theta is not a root of the power transform");

    const std::size_t deg_c = c.size() - 1;
    const std::size_t n0 = (k0 + pp) / pp + 1;
    std::vector<FieldElement> lead(pp);
    int common = -1;
    for (unsigned i = 0; i < pp; ++i) {
      std::vector<FieldElement> t;
      FieldElement th_pow = pow(th, n0);
      for (std::size_t n = n0; n < n0 + mu_prime; ++n) {
        FieldElement w = FieldElement::from_rational(field, 0);
        for (std::size_t j = 0; j <= deg_c; ++j) {
          Integer v = sys.term((n + j) * pp - i);
          w += c[j] * FieldElement::from_rational(field, Rational(v));
        }
        t.push_back(w / th_pow);
        th_pow *= th;
      }
      // Forward differences: the last nonzero one is deg!·(leading coefficient).
      int deg = -1;
      FieldElement top;
      std::vector<FieldElement> level = t;
      for (int k = 0; !level.empty(); ++k) {
        if (!level[0].is_zero()) {
          deg = k;
          top = level[0];
        }
        std::vector<FieldElement> next;
        for (std::size_t a = 0; a + 1 < level.size(); ++a) next.push_back(level[a + 1] - level[a]);
        level = std::move(next);
      }
      if (deg < 0) return fail(BaseFailureKind::UnequalDominantDegrees, "a residue class has no dominant component");
      if (common >= 0 && deg != common)
        return fail(BaseFailureKind::UnequalDominantDegrees,
                    "dominant components have different degrees across residues");
      common = deg;
      lead[i] = top;
    }

    AlternateBase b;
    b.p = pp;
    b.field = field;
    b.minimal_polynomial = mp;
    b.dominant_multiplicity = mu;
    for (unsigned i = 0; i + 1 < pp; ++i) b.betas.push_back(lead[i] / lead[i + 1]);
    b.betas.push_back(lead[pp - 1] / lead[0] * th);
    for (const auto& beta : b.betas)
      if (field_compare(beta, Rational(1)) < 0)
        return fail(BaseFailureKind::NotRhoXiStructure, "a limit ratio is below 1");
    return b;
  } catch (const UnsupportedField& e) {
    return fail(BaseFailureKind::UnsupportedField, e.what());
  }
}

Digit UltimatelyPeriodicWord::at(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  return period[(k - prefix.size()) % period.size()];
}

FiniteWord UltimatelyPeriodicWord::take(std::size_t n) const {
  FiniteWord w;
  for (std::size_t k = 0; k < n; ++k) w.digits.push_back(at(k));
  return w;
}

void UltimatelyPeriodicWord::normalize() {
  std::size_t len = period.size();
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d) continue;
    bool ok = true;
    for (std::size_t k = d; k < len && ok; ++k) ok = period[k] == period[k % d];
    if (ok) {
      period.resize(d);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == period.back()) {
    period.insert(period.begin(), prefix.back());
    period.pop_back();
    prefix.pop_back();
  }
}

std::string UltimatelyPeriodicWord::str() const {
  std::string s = FiniteWord(prefix).str();
  std::string per = FiniteWord(period).str();
  if (!s.empty() && per.size() > 1 && per.find('.') != std::string::npos) s += '.';
  s += period.size() == 1 ? per + "^ω" : "(" + per + ")^ω";
  return s;
}

std::string to_string(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Finite: return "finite";
    case ExpansionStatus::UltimatelyPeriodic: return "ultimately-periodic";
    case ExpansionStatus::Unknown: return "unknown";
  }
  return "?";
}

std::size_t ExpansionRecord::length() const {
  if (!finite()) throw UnresolvedExpansion("length() needs a finite expansion");
  return preperiod.size();
}

Digit ExpansionRecord::digit(std::size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  if (period.empty()) return 0;
  return period[(k - preperiod.size()) % period.size()];
}

UltimatelyPeriodicWord ExpansionRecord::word() const {
  if (!resolved()) throw UnresolvedExpansion("expansion " + std::to_string(shift) + " is unresolved");
  UltimatelyPeriodicWord w{preperiod, period.empty() ? std::vector<Digit>{0} : period};
  w.normalize();
  return w;
}

ExpansionRecord expand_one(const AlternateBase& base, unsigned i, const ExpansionBudget& budget) {
  if (i >= base.p) throw OutOfRange("expand_one: shift out of range");
  ExpansionRecord rec;
  rec.shift = i;
  if (base.degenerate()) {
    rec.status = ExpansionStatus::Finite;
    rec.preperiod = {1};
    rec.note = "degenerate base, d(1) := 10^ω";
    return rec;
  }
  const FieldPtr& f = base.field;
  std::unordered_map<std::string, std::size_t> seen;
  FieldElement r = FieldElement::from_rational(f, 1);
  std::vector<Digit> digits;
  for (std::size_t n = 0;; ++n) {
    std::string key = std::to_string((i + n) % base.p) + "|" + r.key();
    auto [it, inserted] = seen.emplace(std::move(key), n);
    if (!inserted) {
      std::size_t j = it->second;
      UltimatelyPeriodicWord w{std::vector<Digit>(digits.begin(), digits.begin() + j),
                               std::vector<Digit>(digits.begin() + j, digits.end())};
      w.normalize();
      rec.status = ExpansionStatus::UltimatelyPeriodic;
      rec.preperiod = w.prefix;
      rec.period = w.period;
      return rec;
    }
    if (n >= budget.steps) {
      rec.note = "step budget of " + std::to_string(budget.steps) + " exhausted";
      rec.preperiod = digits;
      return rec;
    }
    FieldElement x = base.beta(i + n) * r;
    Integer a = field_floor(x);
    if (!a.fits_uint_p()) throw OutOfRange("expand_one: digit too large");
    digits.push_back(static_cast<Digit>(a.get_ui()));
    r = x - FieldElement::from_rational(f, Rational(a));
    rec.steps_used = n + 1;
    if (r.is_zero()) {
      rec.status = ExpansionStatus::Finite;
      rec.preperiod = digits;
      return rec;
    }
    if (r.height_bits() > budget.max_height_bits) {
      rec.note = "remainder height exceeded " + std::to_string(budget.max_height_bits) + " bits after " +
                 std::to_string(n + 1) + " steps";
      rec.preperiod = digits;
      return rec;
    }
  }
}

std::vector<ExpansionRecord> expand_all(const AlternateBase& base, const ExpansionBudget& budget) {
  std::vector<ExpansionRecord> out;
  for (unsigned i = 0; i < base.p; ++i) out.push_back(expand_one(base, i, budget));
  return out;
}

FieldElement expansion_value(const AlternateBase& base, const ExpansionRecord& rec) {
  const FieldPtr& f = base.field;
  if (!rec.resolved()) throw UnresolvedExpansion("expansion_value: unresolved record");
  if (base.degenerate()) return FieldElement::from_rational(f, 1);
  FieldElement sum = FieldElement::from_rational(f, 0);
  FieldElement prod = FieldElement::from_rational(f, 1);
  const unsigned i = rec.shift;
  for (std::size_t k = 0; k < rec.preperiod.size(); ++k) {
    prod *= base.beta(i + k);
    sum += FieldElement::from_rational(f, rec.preperiod[k]) / prod;
  }
  if (rec.finite()) return sum;
  const std::size_t q = rec.preperiod.size();
  const std::size_t block = std::lcm(rec.period.size(), static_cast<std::size_t>(base.p));
  FieldElement tail = FieldElement::from_rational(f, 0);
  FieldElement g = FieldElement::from_rational(f, 1);
  for (std::size_t k = q; k < q + block; ++k) {
    prod *= base.beta(i + k);
    g *= base.beta(i + k);
    tail += FieldElement::from_rational(f, rec.digit(k)) / prod;
  }
  FieldElement one = FieldElement::from_rational(f, 1);
  return sum + tail / (one - one / g);
}

std::vector<UltimatelyPeriodicWord> quasi_greedy(const std::vector<ExpansionRecord>& records) {
  const unsigned p = static_cast<unsigned>(records.size());
  for (const auto& r : records)
    if (!r.resolved()) throw UnresolvedExpansion("quasi_greedy: expansion " + std::to_string(r.shift) + " unresolved");
  std::vector<UltimatelyPeriodicWord> out;
  for (unsigned i = 0; i < p; ++i) {
    std::vector<Digit> acc;
    std::unordered_map<unsigned, std::size_t> pos;
    unsigned v = i;
    UltimatelyPeriodicWord w;
    while (true) {
      const auto& rec = records[v];
      if (!rec.finite()) {
        w.prefix = acc;
        w.prefix.insert(w.prefix.end(), rec.preperiod.begin(), rec.preperiod.end());
        w.period = rec.period;
        break;
      }
      if (auto it = pos.find(v); it != pos.end()) {
        w.prefix.assign(acc.begin(), acc.begin() + it->second);
        w.period.assign(acc.begin() + it->second, acc.end());
        break;
      }
      pos[v] = acc.size();
      std::vector<Digit> dprime = rec.preperiod;
      dprime.back() -= 1;
      acc.insert(acc.end(), dprime.begin(), dprime.end());
      v = static_cast<unsigned>((v + rec.length()) % p);
    }
    w.normalize();
    out.push_back(std::move(w));
  }
  return out;
}

std::string to_string(Category c) {
  switch (c) {
    case Category::NoSuccessor: return "no-successor";
    case Category::LeadsToNoSuccessor: return "leads-to-no-successor";
    case Category::InCycle: return "in-cycle";
    case Category::LeadsToCycle: return "leads-to-cycle";
    case Category::Unknown: return "unknown";
  }
  return "?";
}

unsigned SuccessorGraph::sigma_pow(unsigned i, unsigned j) const {
  unsigned v = i;
  for (unsigned h = 0; h < j; ++h) {
    if (!successor[v]) throw UndefinedIntermediate("sigma^" + std::to_string(j) + "(" + std::to_string(i) + ") undefined");
    v = *successor[v];
  }
  return v;
}

std::size_t SuccessorGraph::k(unsigned i, unsigned j) const {
  std::size_t s = 0;
  unsigned v = i;
  for (unsigned h = 0; h < j; ++h) {
    if (!successor[v]) throw UndefinedIntermediate("k_{i,j} undefined");
    s += lengths[v];
    v = *successor[v];
  }
  return s;
}

long SuccessorGraph::m(unsigned i, unsigned j) const {
  long num = static_cast<long>(i) + static_cast<long>(k(i, j)) - static_cast<long>(sigma_pow(i, j));
  return num / static_cast<long>(p);
}

std::vector<std::pair<unsigned, unsigned>> SuccessorGraph::edges() const {
  std::vector<std::pair<unsigned, unsigned>> e;
  for (unsigned i = 0; i < p; ++i)
    if (successor[i]) e.emplace_back(i, *successor[i]);
  return e;
}

std::vector<unsigned> SuccessorGraph::cycle_from(unsigned i) const {
  std::vector<unsigned> c{i};
  unsigned v = sigma_pow(i, 1);
  while (v != i) {
    c.push_back(v);
    if (c.size() > p) throw UndefinedIntermediate("vertex is not on a cycle");
    v = sigma_pow(v, 1);
  }
  return c;
}

SuccessorGraph build_graph(const std::vector<ExpansionRecord>& records, bool allow_unresolved) {
  SuccessorGraph g;
  g.p = static_cast<unsigned>(records.size());
  g.successor.assign(g.p, std::nullopt);
  g.lengths.assign(g.p, 0);
  for (unsigned i = 0; i < g.p; ++i) {
    const auto& r = records[i];
    if (!r.resolved() && !allow_unresolved)
      throw UnresolvedExpansion("build_graph: expansion " + std::to_string(i) + " unresolved");
    if (r.finite()) {
      g.lengths[i] = r.length();
      g.successor[i] = static_cast<unsigned>((i + r.length()) % g.p);
    }
  }
  g.classes.resize(g.p);
  for (unsigned i = 0; i < g.p; ++i) {
    std::unordered_map<unsigned, unsigned> when;
    unsigned v = i;
    unsigned step = 0;
    VertexClass c;
    while (true) {
      if (!records[v].resolved()) {
        c.category = Category::Unknown;
        break;
      }
      if (!g.successor[v]) {
        c.category = step == 0 ? Category::NoSuccessor : Category::LeadsToNoSuccessor;
        c.distance = step;
        c.target = v;
        break;
      }
      if (auto it = when.find(v); it != when.end()) {
        unsigned first = it->second;
        c.cycle_length = step - first;
        c.distance = first;
        c.category = first == 0 ? Category::InCycle : Category::LeadsToCycle;
        c.target = g.sigma_pow(i, first);
        break;
      }
      when[v] = step++;
      v = *g.successor[v];
    }
    g.classes[i] = c;
  }
  return g;
}

IntermediateExpansion intermediate_w(const std::vector<ExpansionRecord>& records, const SuccessorGraph& graph,
                                     unsigned i, unsigned j, std::size_t prefix_len) {
  IntermediateExpansion out;
  unsigned v = i;
  std::vector<Digit> acc;
  for (unsigned h = 0; h < j; ++h) {
    const auto& r = records[v];
    if (!r.finite() || !graph.successor[v])
      throw UndefinedIntermediate("w_{" + std::to_string(i) + "," + std::to_string(j) + "} is undefined");
    std::vector<Digit> dprime = r.preperiod;
    dprime.back() -= 1;
    acc.insert(acc.end(), dprime.begin(), dprime.end());
    out.k += r.length();
    v = *graph.successor[v];
  }
  const auto& last = records[v];
  if (!last.resolved()) throw UndefinedIntermediate("w_{i,j} ends in an unresolved expansion");
  for (std::size_t k = 0; acc.size() < prefix_len; ++k) acc.push_back(last.digit(k));
  acc.resize(prefix_len);
  out.prefix = FiniteWord(std::move(acc));
  out.m = (static_cast<long>(i) + static_cast<long>(out.k) - static_cast<long>(v)) / static_cast<long>(graph.p);
  return out;
}

}  // namespace numsys
