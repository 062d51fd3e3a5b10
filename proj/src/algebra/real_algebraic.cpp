#include "numsys/algebra/real_algebraic.hpp"

#include <stdexcept>

namespace numsys::algebra {

namespace {

Rational abs_q(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

template <class T>
RatInterval enclose_impl(const Polynomial<T>& g, const RatInterval& x) {
  if (g.is_zero()) return {0, 0};
  Rational c = (x.lo + x.hi) / 2;
  Rational r = (x.hi - x.lo) / 2;
  Rational v = g.template evaluate<Rational>(c);
  if (sgn(r) == 0) return {v, v};
  Rational big = abs_q(x.lo) > abs_q(x.hi) ? abs_q(x.lo) : abs_q(x.hi);
  // Bound on |g'| over the interval.
  Rational b = 0, pw = 1;
  for (int k = 1; k <= g.degree(); ++k) {
    b += abs_q(Rational(g.coeff(k))) * k * pw;
    pw *= big;
  }
  Rational e = b * r;
  return {v - e, v + e};
}

int sign_at(const IntPolynomial& p, const Rational& x) { return sgn(p.evaluate<Rational>(x)); }

int variations(const std::vector<RatPolynomial>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.evaluate<Rational>(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

RatInterval enclose(const RatPolynomial& g, const RatInterval& x) { return enclose_impl(g, x); }
RatInterval enclose(const IntPolynomial& g, const RatInterval& x) { return enclose_impl(g, x); }

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  std::vector<RatPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RatPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    RatPolynomial r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int count_roots(const std::vector<RatPolynomial>& sturm, const Rational& a, const Rational& b) {
  return variations(sturm, a) - variations(sturm, b);
}

Rational root_bound(const IntPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = abs_q(Rational(p.coeff(i)) / Rational(p.leading()));
    if (q > m) m = q;
  }
  m += 1;
  // Round up to a power of two so bisection midpoints stay dyadic.
  Rational b = 1;
  while (b < m) b *= 2;
  return b;
}

RealAlgebraic::RealAlgebraic(IntPolynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), state_(std::make_shared<State>()) {
  if (lo > hi) throw std::invalid_argument("RealAlgebraic: empty interval");
  state_->lo = lo;
  state_->hi = hi;
  if (lo == hi) {
    state_->exact = true;
    return;
  }
  sign_at_lo_ = sign_at(poly_, lo);
  int sh = sign_at(poly_, hi);
  if (sign_at_lo_ == 0 || sh == 0 || sign_at_lo_ == sh)
    throw std::invalid_argument("RealAlgebraic: interval endpoints must bracket a simple root strictly");
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& r) {
  IntPolynomial p{-r.get_num(), r.get_den()};
  return RealAlgebraic(p, r, r);
}

void RealAlgebraic::bisect_locked(State& s) const {
  if (s.exact) return;
  if (++s.bisections > kBisectionCap) throw std::runtime_error("interval refinement exceeded the bisection cap");
  Rational mid = (s.lo + s.hi) / 2;
  int sm = sign_at(poly_, mid);
  if (sm == 0) {
    s.lo = s.hi = mid;
    s.exact = true;
  } else if (sm == sign_at_lo_) {
    s.lo = mid;
  } else {
    s.hi = mid;
  }
}

RatInterval RealAlgebraic::interval() const {
  std::lock_guard<std::mutex> g(state_->mu);
  return {state_->lo, state_->hi};
}

RatInterval RealAlgebraic::interval_within(const Rational& w) const {
  std::lock_guard<std::mutex> g(state_->mu);
  while (!state_->exact && state_->hi - state_->lo > w) bisect_locked(*state_);
  return {state_->lo, state_->hi};
}

std::optional<Rational> RealAlgebraic::rational_value() const {
  std::lock_guard<std::mutex> g(state_->mu);
  if (state_->exact) return state_->lo;
  return std::nullopt;
}

double RealAlgebraic::approx() const {
  RatInterval iv = interval_within(Rational(1) / Rational(Integer(1) << 60));
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

int RealAlgebraic::compare(const Rational& r) const {
  RatInterval iv = interval();
  if (iv.lo == iv.hi) return iv.lo < r ? -1 : (iv.lo > r ? 1 : 0);
  if (r <= iv.lo) return 1;
  if (r >= iv.hi) return -1;
  int s = sign_at(poly_, r);
  if (s == 0) return 0;
  return s == sign_at_lo_ ? -1 : 1;
}

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  IntPolynomial q = squarefree_part(p);
  std::vector<RealAlgebraic> out;
  if (q.degree() <= 0) return out;
  auto seq = sturm_sequence(to_rational(q));
  Rational bound = root_bound(q);
  Integer lc = q.leading();
  if (lc < 0) lc = -lc;

  auto emit = [&](const Rational& a, const Rational& b) {
    RealAlgebraic x(q, a, b);
    // A rational root r satisfies lc·r ∈ Z; test the unique candidate once the interval is narrow.
    Integer four_lc = 4 * lc;
    RatInterval iv = x.interval_within(Rational(1) / Rational(four_lc));
    if (iv.lo == iv.hi) {
      out.push_back(RealAlgebraic::from_rational(iv.lo));
      return;
    }
    Rational shifted = (iv.lo + iv.hi) / 2 * lc + Rational(1, 2);
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    Rational cand = Rational(k) / Rational(lc);
    if (iv.contains(cand) && sgn(q.evaluate<Rational>(cand)) == 0)
      out.push_back(RealAlgebraic::from_rational(cand));
    else
      out.push_back(x);
  };

  // Depth-first, left to right, so the output is ascending.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = count_roots(seq, a, b);
    if (n == 0) continue;
    if (n == 1) {
      if (sign_at(q, b) == 0) {
        out.push_back(RealAlgebraic::from_rational(b));
        continue;
      }
      if (sign_at(q, a) != 0) {
        emit(a, b);
        continue;
      }
    }
    Rational m = (a + b) / 2;
    stack.push_back({m, b});
    stack.push_back({a, m});
  }
  return out;
}

bool vanishes_at(const RatPolynomial& g, const RealAlgebraic& x) {
  if (g.is_zero()) return true;
  if (auto r = x.rational_value()) return sgn(g.evaluate<Rational>(*r)) == 0;
  RatPolynomial h = gcd(g, to_rational(x.polynomial()));
  if (h.degree() <= 0) return false;
  RatInterval iv = x.interval();
  if (auto r = x.rational_value()) return sgn(h.evaluate<Rational>(*r)) == 0;
  int a = sgn(h.evaluate<Rational>(iv.lo)), b = sgn(h.evaluate<Rational>(iv.hi));
  return a != 0 && b != 0 && a != b;
}

bool vanishes_at(const IntPolynomial& g, const RealAlgebraic& x) { return vanishes_at(to_rational(g), x); }

unsigned multiplicity_at(const IntPolynomial& g, const RealAlgebraic& x) {
  if (g.is_zero()) throw std::invalid_argument("multiplicity_at: zero polynomial");
  unsigned k = 0;
  RatPolynomial cur = to_rational(g);
  while (!cur.is_zero() && vanishes_at(cur, x)) {
    ++k;
    cur = cur.derivative();
  }
  return k;
}

RealAlgebraic power_as_root_of(const RealAlgebraic& x, unsigned k, const IntPolynomial& target) {
  auto roots = isolate_real_roots(target);
  Rational w = 1;
  for (int iter = 0; iter < 4000; ++iter) {
    RatInterval iv = x.interval_within(w);
    if (sgn(iv.lo) <= 0 && !x.rational_value()) {
      w /= 2;
      continue;
    }
    Rational lo = 1, hi = 1;
    for (unsigned i = 0; i < k; ++i) {
      lo *= iv.lo;
      hi *= iv.hi;
    }
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      RatInterval r = roots[j].interval_within(w);
      if (r.lo <= hi && lo <= r.hi) hits.push_back(j);
    }
    if (hits.size() == 1) return roots[hits[0]];
    if (hits.empty()) throw std::logic_error("power_as_root_of: target does not vanish at x^k");
    w /= 2;
  }
  throw std::runtime_error("power_as_root_of: could not separate roots");
}

}  // namespace numsys::algebra
