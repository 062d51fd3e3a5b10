#include "numsys/algebra/sequence.hpp"

namespace numsys::algebra {

IntPolynomial min_poly_of_sequence(const std::vector<Rational>& terms, std::size_t start, std::size_t degree_bound) {
  if (terms.size() < start + 2 * degree_bound)
    throw NoRecurrenceFound("min_poly_of_sequence: need at least 2*bound terms after start");
  std::vector<Rational> s(terms.begin() + start, terms.end());
  std::size_t n_terms = s.size();

  std::vector<Rational> c{1}, b{1};
  std::size_t len = 0, m = 1;
  Rational bd = 1;
  for (std::size_t n = 0; n < n_terms; ++n) {
    Rational d = s[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * s[n - i];
    if (sgn(d) == 0) {
      ++m;
      continue;
    }
    Rational f = d / bd;
    std::vector<Rational> t = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= f * b[i];
    if (2 * len <= n) {
      len = n + 1 - len;
      b = std::move(t);
      bd = d;
      m = 1;
    } else {
      ++m;
    }
  }
  if (len > degree_bound || 2 * len > n_terms)
    throw NoRecurrenceFound("min_poly_of_sequence: no recurrence of degree <= " + std::to_string(degree_bound));
  // Characteristic polynomial X^len · C(1/X).
  std::vector<Rational> p(len + 1, Rational(0));
  for (std::size_t i = 0; i <= len && i < c.size(); ++i) p[len - i] = c[i];
  IntPolynomial out = primitive_part(RatPolynomial(std::move(p)));
  // Verify on every supplied term.
  for (std::size_t n = len; n < n_terms; ++n) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= len; ++j) acc += Rational(out.coeff(j)) * s[n - len + j];
    if (sgn(acc) != 0) throw NoRecurrenceFound("min_poly_of_sequence: fitted recurrence fails verification");
  }
  return out;
}

IntPolynomial min_poly_of_sequence(const std::vector<Integer>& terms, std::size_t start, std::size_t degree_bound) {
  std::vector<Rational> q(terms.begin(), terms.end());
  return min_poly_of_sequence(q, start, degree_bound);
}

bool annihilates(const IntPolynomial& p, const std::vector<Integer>& terms, std::size_t start) {
  int d = p.degree();
  if (d < 0) return false;
  for (std::size_t n = start; n + d < terms.size(); ++n) {
    Integer acc = 0;
    for (int j = 0; j <= d; ++j) acc += p.coeff(j) * terms[n + j];
    if (acc != 0) return false;
  }
  return true;
}

IntPolynomial power_transform(const IntPolynomial& p, unsigned k) {
  if (p.is_zero()) throw std::invalid_argument("power_transform: zero polynomial");
  if (k == 0) throw std::invalid_argument("power_transform: k must be positive");
  int d = p.degree();
  if (d == 0 || k == 1) return primitive_part(p);
  RatPolynomial q = monic(to_rational(p));
  std::size_t top = static_cast<std::size_t>(d) * k;
  // Newton identities: power sums s_j of the roots of q.
  std::vector<Rational> s(top + 1, Rational(0));
  auto a = [&](int i) -> Rational { return q.coeff(i); };
  for (std::size_t j = 1; j <= top; ++j) {
    Rational acc = 0;
    for (std::size_t i = 1; i < j && i <= static_cast<std::size_t>(d); ++i) acc += a(d - i) * s[j - i];
    if (j <= static_cast<std::size_t>(d)) acc += a(d - j) * static_cast<unsigned long>(j);
    s[j] = -acc;
  }
  // Power sums of the transformed roots are s_{jk}; rebuild elementary symmetric functions.
  std::vector<Rational> e(d + 1, Rational(0));
  e[0] = 1;
  for (int j = 1; j <= d; ++j) {
    Rational acc = 0;
    for (int i = 1; i <= j; ++i) {
      Rational term = e[j - i] * s[static_cast<std::size_t>(i) * k];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    e[j] = acc / j;
  }
  std::vector<Rational> t(d + 1);
  for (int j = 0; j <= d; ++j) t[d - j] = (j % 2 == 0) ? e[j] : Rational(-e[j]);
  return primitive_part(RatPolynomial(std::move(t)));
}

}  // namespace numsys::algebra
