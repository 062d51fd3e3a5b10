#pragma once
// Dense univariate polynomials over Z and Q (GMP-backed).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace numsys::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }

  // Multiplicity of the root 0.
  std::size_t valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && algebra::is_zero(c_[k])) ++k;
    return k;
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> c(k, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (algebra::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && algebra::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
// Primitive integer multiple of p with positive leading coefficient.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
RatPolynomial monic(const RatPolynomial& p);

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b);
// Monic gcd; gcd(0, 0) = 0.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// Extended Euclid: returns (g, s, t) with s·a + t·b = g, g monic.
struct ExtendedGcd {
  RatPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

// Exact quotient a / b when b divides a over Q, as a primitive integer polynomial scaled
// so that quotient · b = a holds up to a positive rational factor.
bool divides(const IntPolynomial& b, const IntPolynomial& a);
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial squarefree_part(const IntPolynomial& p);
// Yun decomposition: result[k] is the product of the irreducible factors of multiplicity k+1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial pow(const IntPolynomial& p, unsigned k);

std::string to_string(const IntPolynomial& p, char var = 'X');
std::string to_string(const RatPolynomial& p, char var = 'X');

}  // namespace numsys::algebra
