#include "numsys/algebra/polynomial.hpp"

#include <stdexcept>

namespace numsys::algebra {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& v : p.coefficients()) {
    Integer d = v.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v.get_num() * (den / v.get_den()));
  return primitive_part(IntPolynomial(std::move(c)));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer g = 0;
  for (const auto& v : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v / g);
  return IntPolynomial(std::move(c));
}

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    Rational f = r[i] * lead_inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coefficients()[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = a % b;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return primitive_part(gcd(to_rational(a), to_rational(b)));
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  return divmod(to_rational(a), to_rational(b)).second.is_zero();
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw std::domain_error("exact_quotient: not divisible");
  // Keep the integral scale when it exists (b monic or dividing content).
  std::vector<Integer> c;
  bool integral = true;
  for (const auto& v : q.coefficients()) {
    if (v.get_den() != 1) {
      integral = false;
      break;
    }
    c.push_back(v.get_num());
  }
  return integral ? IntPolynomial(std::move(c)) : primitive_part(q);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  IntPolynomial g = gcd(p, p.derivative());
  return primitive_part(exact_quotient(p, g));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  // Yun's algorithm over Q.
  std::vector<IntPolynomial> out;
  if (p.degree() <= 0) return out;
  RatPolynomial f = monic(to_rational(p));
  RatPolynomial fp = f.derivative();
  RatPolynomial a = gcd(f, fp);
  RatPolynomial b = divmod(f, a).first;
  RatPolynomial c = divmod(fp, a).first;
  RatPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    RatPolynomial g = gcd(b, d);
    out.push_back(primitive_part(g));
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

namespace {
template <class T>
std::string render(const Polynomial<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(i);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    T a = neg ? T(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool one = (a == 1);
    if (!one || i == 0) out += a.get_str();
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}
}  // namespace

std::string to_string(const IntPolynomial& p, char var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, char var) { return render(p, var); }

}  // namespace numsys::algebra
