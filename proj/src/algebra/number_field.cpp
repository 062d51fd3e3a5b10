#include "numsys/algebra/number_field.hpp"

#include <cmath>
#include <sstream>

#include "numsys/algebra/complex_roots.hpp"
#include "numsys/algebra/cyclotomic.hpp"

namespace numsys::algebra {

NumberField::NumberField(IntPolynomial modulus, RealAlgebraic theta, bool irreducible)
    : modulus_(primitive_part(modulus)),
      monic_(monic(to_rational(modulus_))),
      theta_(std::move(theta)),
      irreducible_(irreducible || modulus_.degree() == 1) {
  if (modulus_.degree() < 1) throw std::invalid_argument("NumberField: modulus must have positive degree");
  if (!vanishes_at(modulus_, theta_)) throw std::invalid_argument("NumberField: modulus does not vanish at theta");
}

FieldPtr NumberField::make(IntPolynomial modulus, RealAlgebraic theta, bool irreducible) {
  return std::make_shared<const NumberField>(std::move(modulus), std::move(theta), irreducible);
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = make(IntPolynomial{0, 1}, RealAlgebraic::from_rational(0), true);
  return q;
}

FieldElement::FieldElement(FieldPtr field, const RatPolynomial& value) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  value_ = value.degree() >= static_cast<int>(field_->degree()) ? value % field_->monic_modulus() : value;
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& q) {
  return FieldElement(std::move(field), RatPolynomial::constant(q));
}

FieldElement FieldElement::generator(FieldPtr field) { return FieldElement(std::move(field), RatPolynomial::x()); }

std::vector<Rational> FieldElement::coords() const {
  std::vector<Rational> c(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < value_.size(); ++i) c[i] = value_.coeff(i);
  return c;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("FieldElement: operands live in different fields");
}

bool FieldElement::is_zero() const {
  if (value_.is_zero()) return true;
  if (value_.degree() == 0 || field_->irreducible()) return false;
  return vanishes_at(value_, field_->generator());
}

std::optional<Rational> FieldElement::rational_value() const {
  // With a reducible modulus a non-constant representative can still be rational; callers only
  // use this as a fast path, so that case simply reports nullopt.
  if (value_.degree() <= 0) return value_.coeff(0);
  return std::nullopt;
}

RatInterval FieldElement::enclosure(const Rational& max_width) const {
  if (value_.degree() <= 0) return {value_.coeff(0), value_.coeff(0)};
  Rational w = 1;
  for (unsigned long guard = 0;; ++guard) {
    RatInterval t = field_->generator().interval_within(w);
    RatInterval e = enclose(value_, t);
    if (e.width() <= max_width || t.lo == t.hi) return e;
    w /= 16;
    if (guard > kBisectionCap) throw std::runtime_error("FieldElement::enclosure: refinement cap");
  }
}

int FieldElement::sign() const {
  if (value_.is_zero()) return 0;
  if (value_.degree() == 0) return sgn(value_.coeff(0));
  if (is_zero()) return 0;
  Rational w(1, 1ul << 20);
  for (unsigned long bits = 20; bits < kBisectionCap; bits *= 2) {
    RatInterval e = enclose(value_, field_->generator().interval_within(w));
    if (sgn(e.lo) > 0) return 1;
    if (sgn(e.hi) < 0) return -1;
    w *= w;
  }
  throw std::runtime_error("FieldElement::sign: refinement cap");
}

double FieldElement::approx() const {
  RatInterval e = enclosure(Rational(1) / Rational(Integer(1) << 64));
  return Rational((e.lo + e.hi) / 2).get_d();
}

std::size_t FieldElement::height_bits() const {
  std::size_t h = 0;
  for (const auto& c : value_.coefficients()) {
    h = std::max(h, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    h = std::max(h, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return h;
}

std::string FieldElement::to_string(const std::string& var) const {
  if (value_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < value_.size(); ++i) {
    Rational c = value_.coeff(i);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string FieldElement::key() const {
  std::string k;
  for (const auto& c : value_.coefficients()) {
    k += c.get_str();
    k += ';';
  }
  return k;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ += o.value_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ -= o.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  RatPolynomial prod = value_ * o.value_;
  value_ = prod.degree() >= static_cast<int>(field_->degree()) ? prod % field_->monic_modulus() : prod;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (value_.is_zero()) throw DivisionByZero("FieldElement: division by zero");
  if (value_.degree() == 0) return from_rational(field_, 1 / value_.coeff(0));
  ExtendedGcd eg = extended_gcd(value_, field_->monic_modulus());
  if (eg.g.degree() == 0) return FieldElement(field_, eg.s);
  if (is_zero()) throw DivisionByZero("FieldElement: division by zero");
  throw UnsupportedField("field modulus " + algebra::to_string(field_->modulus()) +
                         " is reducible and the divisor is a zero divisor");
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, -a.value_); }

namespace {

// Searches for a monic integer factor of the monic polynomial q built from a subset of its
// approximate roots. Returns nullopt when none exists among the subsets tried; `exhaustive` reports
// whether every subset up to half the degree was covered.
std::optional<IntPolynomial> find_factor(const IntPolynomial& q, bool& exhaustive) {
  const int n = q.degree();
  exhaustive = false;
  if (n > 16) return std::nullopt;
  auto roots = approximate_roots(q);
  std::vector<int> pick;
  for (int k = 1; k <= n / 2; ++k) {
    pick.assign(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<Complex> c{Complex(1)};
      for (int idx : pick) {
        std::vector<Complex> next(c.size() + 1, Complex(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
          next[j + 1] += c[j];
          next[j] -= c[j] * roots[idx];
        }
        c = std::move(next);
      }
      bool plausible = true;
      std::vector<Integer> coeffs;
      for (const auto& v : c) {
        long double re = std::round(v.real());
        if (std::fabs(v.imag()) > 1e-6L * (1 + std::fabs(v.real())) ||
            std::fabs(v.real() - re) > 1e-6L * (1 + std::fabs(re)) || std::fabs(re) > 1e18L) {
          plausible = false;
          break;
        }
        coeffs.emplace_back(static_cast<long>(re));
      }
      if (plausible) {
        IntPolynomial g(coeffs);
        if (g.degree() == k && divides(g, q)) return g;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  exhaustive = true;
  return std::nullopt;
}

}  // namespace

FieldPtr field_generated_by(const IntPolynomial& vanishing, const RealAlgebraic& theta) {
  if (auto r = theta.rational_value()) return NumberField::make(IntPolynomial{-r->get_num(), r->get_den()}, theta, true);
  if (!vanishes_at(vanishing, theta)) throw std::invalid_argument("field_generated_by: polynomial does not vanish at theta");
  IntPolynomial q = squarefree_part(vanishing);
  CyclotomicProfile prof = cyclotomic_profile(q);
  q = prof.remainder;
  for (const auto& root : isolate_real_roots(q)) {
    if (auto r = root.rational_value()) q = exact_quotient(q, IntPolynomial{-r->get_num(), r->get_den()});
  }
  q = primitive_part(q);
  bool certified = q.degree() <= 3;
  while (!certified && q.leading() == 1) {
    bool exhaustive = false;
    auto g = find_factor(q, exhaustive);
    if (!g) {
      certified = exhaustive;
      break;
    }
    IntPolynomial h = exact_quotient(q, *g);
    q = primitive_part(vanishes_at(*g, theta) ? *g : h);
    if (q.degree() <= 3) certified = true;
  }
  RatInterval iv = theta.interval();
  return NumberField::make(q, RealAlgebraic(q, iv.lo, iv.hi), certified);
}

FieldElement pow(const FieldElement& x, unsigned long k) {
  FieldElement r = FieldElement::from_rational(x.field(), 1);
  FieldElement b = x;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Integer field_floor(const FieldElement& x) {
  auto floor_q = [](const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
  };
  if (x.polynomial().degree() <= 0) return floor_q(x.polynomial().coeff(0));
  Rational w(1, 1ul << 20);
  for (unsigned long bits = 20; bits < kBisectionCap; bits *= 2) {
    RatInterval e = x.enclosure(w);
    Integer a = floor_q(e.lo), b = floor_q(e.hi);
    if (a == b) return a;
    if (!x.field()->irreducible() && b == a + 1 &&
        (x - FieldElement::from_rational(x.field(), Rational(b))).is_zero())
      return b;
    w *= w;
  }
  throw std::runtime_error("field_floor: refinement cap");
}

int field_compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

int field_compare(const FieldElement& a, const Rational& b) {
  return (a - FieldElement::from_rational(a.field(), b)).sign();
}

}  // namespace numsys::algebra
