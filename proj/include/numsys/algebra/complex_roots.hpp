#pragma once
// Floating-point approximations of all complex roots (Aberth iteration).
// Only used to compare root moduli; every structural conclusion drawn from it is re-checked exactly.

#include <complex>
#include <vector>

#include "numsys/algebra/polynomial.hpp"

namespace numsys::algebra {

using Complex = std::complex<long double>;

// Roots of p with multiplicity (best accuracy when p is squarefree).
std::vector<Complex> approximate_roots(const IntPolynomial& p);

}  // namespace numsys::algebra
