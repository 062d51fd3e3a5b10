#pragma once
// Splitting off the factor X^k and all cyclotomic factors of an integer polynomial.

#include <utility>
#include <vector>

#include "numsys/algebra/polynomial.hpp"

namespace numsys::algebra {

unsigned euler_phi(unsigned n);
const IntPolynomial& cyclotomic_polynomial(unsigned d);

struct CyclotomicProfile {
  unsigned power_of_x = 0;
  // (order d, multiplicity of Φ_d), ascending in d.
  std::vector<std::pair<unsigned, unsigned>> unit_root_orders;
  IntPolynomial remainder;

  IntPolynomial reconstruct() const;
  bool only_unit_roots() const { return remainder.degree() == 0; }
  unsigned max_unit_multiplicity() const;
  // lcm of the orders; 1 when there are none.
  unsigned long order_lcm() const;
};

CyclotomicProfile cyclotomic_profile(const IntPolynomial& p);

std::string to_string(const CyclotomicProfile& c);

}  // namespace numsys::algebra
