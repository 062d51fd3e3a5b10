#pragma once
// Minimal polynomials of linear recurrence sequences, and the root-power transform.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "numsys/algebra/polynomial.hpp"

namespace numsys::algebra {

struct NoRecurrenceFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Berlekamp–Massey over Q on terms[start..]. The result is primitive with positive leading
// coefficient; dividing by the leading coefficient gives the monic minimal polynomial.
// Throws NoRecurrenceFound when no recurrence of degree ≤ degree_bound fits every supplied term,
// or when fewer than 2·degree_bound terms are available after `start`.
IntPolynomial min_poly_of_sequence(const std::vector<Rational>& terms, std::size_t start, std::size_t degree_bound);
IntPolynomial min_poly_of_sequence(const std::vector<Integer>& terms, std::size_t start, std::size_t degree_bound);

// True iff the polynomial (as a shift operator) annihilates terms[start..].
bool annihilates(const IntPolynomial& p, const std::vector<Integer>& terms, std::size_t start);

// Polynomial whose roots are {α^k : p(α) = 0} with multiplicity (via Newton power sums).
IntPolynomial power_transform(const IntPolynomial& p, unsigned k);

}  // namespace numsys::algebra
