#include "numsys/algebra/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace numsys::algebra {

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

const IntPolynomial& cyclotomic_polynomial(unsigned d) {
  static std::mutex mu;
  static std::map<unsigned, IntPolynomial> cache;
  if (d == 0) throw std::invalid_argument("cyclotomic_polynomial: order 0");
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // Φ_d = (X^d − 1) / Π_{e | d, e < d} Φ_e
  IntPolynomial num = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) num = exact_quotient(num, cyclotomic_polynomial(e));
  std::lock_guard<std::mutex> g(mu);
  return cache.emplace(d, std::move(num)).first->second;
}

IntPolynomial CyclotomicProfile::reconstruct() const {
  IntPolynomial r = remainder.shifted(power_of_x);
  for (auto [d, m] : unit_root_orders) r *= pow(cyclotomic_polynomial(d), m);
  return r;
}

unsigned CyclotomicProfile::max_unit_multiplicity() const {
  unsigned m = 0;
  for (auto [d, k] : unit_root_orders) m = std::max(m, k);
  return m;
}

unsigned long CyclotomicProfile::order_lcm() const {
  unsigned long l = 1;
  for (auto [d, k] : unit_root_orders) l = std::lcm(l, static_cast<unsigned long>(d));
  return l;
}

CyclotomicProfile cyclotomic_profile(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_profile: zero polynomial");
  CyclotomicProfile out;
  out.power_of_x = static_cast<unsigned>(p.valuation());
  IntPolynomial rest(std::vector<Integer>(p.coefficients().begin() + out.power_of_x, p.coefficients().end()));
  int deg = rest.degree();
  for (unsigned d = 1; deg > 0 && d <= 2u * static_cast<unsigned>(deg * deg) + 2; ++d) {
    if (euler_phi(d) > static_cast<unsigned>(deg)) continue;
    const IntPolynomial& phi = cyclotomic_polynomial(d);
    unsigned mult = 0;
    while (rest.degree() >= phi.degree() && divides(phi, rest)) {
      rest = exact_quotient(rest, phi);
      ++mult;
    }
    if (mult) out.unit_root_orders.emplace_back(d, mult);
  }
  out.remainder = rest;
  return out;
}

std::string to_string(const CyclotomicProfile& c) {
  std::string s = "X^" + std::to_string(c.power_of_x);
  for (auto [d, m] : c.unit_root_orders) s += " * Phi_" + std::to_string(d) + "^" + std::to_string(m);
  s += " * (" + to_string(c.remainder) + ")";
  return s;
}

}  // namespace numsys::algebra
