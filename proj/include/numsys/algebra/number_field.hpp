#pragma once
// Real number fields Q(θ) and their elements, with exact sign, comparison and floor.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numsys/algebra/real_algebraic.hpp"

namespace numsys::algebra {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
// Raised when the defining polynomial turned out reducible in a way the arithmetic cannot absorb.
struct UnsupportedField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NumberField {
 public:
  // `modulus` must vanish at theta and be squarefree. When `irreducible` is false, zero tests
  // fall back to gcd-based checks against theta's isolating interval.
  NumberField(IntPolynomial modulus, RealAlgebraic theta, bool irreducible);

  static std::shared_ptr<const NumberField> make(IntPolynomial modulus, RealAlgebraic theta, bool irreducible);
  static std::shared_ptr<const NumberField> rationals();

  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
  const IntPolynomial& modulus() const { return modulus_; }
  const RatPolynomial& monic_modulus() const { return monic_; }
  const RealAlgebraic& generator() const { return theta_; }
  bool irreducible() const { return irreducible_; }

 private:
  IntPolynomial modulus_;
  RatPolynomial monic_;
  RealAlgebraic theta_;
  bool irreducible_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, const RatPolynomial& value);
  static FieldElement from_rational(FieldPtr field, const Rational& q);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const RatPolynomial& polynomial() const { return value_; }
  // Coordinates on 1, θ, …, θ^{degree−1}.
  std::vector<Rational> coords() const;

  bool is_zero() const;
  std::optional<Rational> rational_value() const;
  int sign() const;
  RatInterval enclosure(const Rational& max_width) const;
  double approx() const;
  // Largest bit length among numerators and denominators of the coordinates.
  std::size_t height_bits() const;
  std::string to_string(const std::string& var = "t") const;
  // Canonical text of the coordinates (used as a hash key).
  std::string key() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(const FieldElement& a);
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return (a - b).is_zero(); }

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  RatPolynomial value_;
};

// Q(θ) from any nonzero polynomial vanishing at θ. The defining polynomial is cut down to the factor
// vanishing at θ: squarefree part, then X, cyclotomic factors and rational roots are split off, then a
// bounded search for integer factors guided by approximate roots. The field is flagged irreducible
// only when that search was exhaustive.
FieldPtr field_generated_by(const IntPolynomial& vanishing, const RealAlgebraic& theta);

FieldElement pow(const FieldElement& x, unsigned long k);
Integer field_floor(const FieldElement& x);
// -1, 0, +1.
int field_compare(const FieldElement& a, const FieldElement& b);
int field_compare(const FieldElement& a, const Rational& b);

}  // namespace numsys::algebra
