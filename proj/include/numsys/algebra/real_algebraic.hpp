#pragma once
// Real algebraic numbers as (squarefree defining polynomial, isolating interval).

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "numsys/algebra/polynomial.hpp"

namespace numsys::algebra {

struct RatInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Mean-value enclosure of g over x.
RatInterval enclose(const RatPolynomial& g, const RatInterval& x);
RatInterval enclose(const IntPolynomial& g, const RatInterval& x);

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p);
// Number of distinct roots of the Sturm sequence's first polynomial in (a, b].
int count_roots(const std::vector<RatPolynomial>& sturm, const Rational& a, const Rational& b);
Rational root_bound(const IntPolynomial& p);

class RealAlgebraic {
 public:
  // `poly` squarefree with a unique root in [lo, hi]; lo == hi means the rational root lo.
  RealAlgebraic(IntPolynomial poly, Rational lo, Rational hi);
  static RealAlgebraic from_rational(const Rational& r);

  const IntPolynomial& polynomial() const { return poly_; }
  RatInterval interval() const;
  // Refine until the width is at most `w` and return the interval.
  RatInterval interval_within(const Rational& w) const;
  std::optional<Rational> rational_value() const;
  bool is_rational() const { return rational_value().has_value(); }
  double approx() const;
  // Exact sign of (this - r).
  int compare(const Rational& r) const;

 private:
  struct State {
    std::mutex mu;
    Rational lo, hi;
    bool exact = false;
    unsigned long bisections = 0;
  };
  void bisect_locked(State& s) const;

  IntPolynomial poly_;
  int sign_at_lo_ = 0;
  std::shared_ptr<State> state_;
};

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p);

// True iff g(x) = 0, decided exactly via gcd with x's polynomial and a root count on x's interval.
bool vanishes_at(const RatPolynomial& g, const RealAlgebraic& x);
bool vanishes_at(const IntPolynomial& g, const RealAlgebraic& x);
unsigned multiplicity_at(const IntPolynomial& g, const RealAlgebraic& x);

// Given a positive real algebraic x and k ≥ 1, returns x^k identified among the real roots of `target`
// (which must vanish at x^k).
RealAlgebraic power_as_root_of(const RealAlgebraic& x, unsigned k, const IntPolynomial& target);

constexpr unsigned long kBisectionCap = 1000000;

}  // namespace numsys::algebra
