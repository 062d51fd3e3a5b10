#pragma once
// Positional numeration systems given by an integer linear recurrence, and greedy representations.

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "numsys/algebra/polynomial.hpp"
#include "numsys/errors.hpp"

namespace numsys {

using algebra::Integer;
using algebra::IntPolynomial;
using algebra::Rational;
using Digit = std::uint32_t;

// Digits, most significant first.
struct FiniteWord {
  std::vector<Digit> digits;

  FiniteWord() = default;
  explicit FiniteWord(std::vector<Digit> d) : digits(std::move(d)) {}
  // "2001" (one character per digit) or "10.2.0" (dot-separated) ; "" is the empty word.
  static FiniteWord parse(std::string_view text);

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  Digit operator[](std::size_t i) const { return digits[i]; }
  FiniteWord suffix(std::size_t n) const;
  FiniteWord prefix(std::size_t n) const;
  // Plain digit string; dot-separated when some digit exceeds 9. Empty word renders as "".
  std::string str() const;
  // Like str() but the empty word renders as "ε".
  std::string display() const;

  auto operator<=>(const FiniteWord&) const = default;
};

FiniteWord operator+(const FiniteWord& a, const FiniteWord& b);
FiniteWord power(const FiniteWord& w, std::size_t k);
FiniteWord zeros(std::size_t n);

class PositionalSystem {
 public:
  // recurrence = (c_{m−1}, …, c_0) for U_{n+m} = Σ c_j U_{n+j}; initial = (U_0, …, U_{m−1}).
  PositionalSystem(std::vector<Integer> recurrence, std::vector<Integer> initial, std::string name = {});
  PositionalSystem(const PositionalSystem& o);
  PositionalSystem& operator=(const PositionalSystem& o);

  std::size_t order() const { return recurrence_.size(); }
  const std::vector<Integer>& recurrence() const { return recurrence_; }
  const std::vector<Integer>& initial() const { return initial_; }
  const std::string& name() const { return name_; }
  IntPolynomial characteristic_polynomial() const;

  // Exact U_n; throws NotIncreasing when monotonicity breaks at or before n.
  Integer term(std::size_t n) const;
  std::vector<Integer> terms(std::size_t count) const;

 private:
  void extend_locked(std::size_t n) const;

  std::vector<Integer> recurrence_;
  std::vector<Integer> initial_;
  std::string name_;
  mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
  mutable std::vector<Integer> cache_;
};

Integer val(const PositionalSystem& sys, const FiniteWord& w);
FiniteWord rep(const PositionalSystem& sys, const Integer& x);
bool is_greedy(const PositionalSystem& sys, const FiniteWord& w);
FiniteWord max_word(const PositionalSystem& sys, std::size_t n);
// 0^ℓ · rep(U_{np−i} − c), of total length np − i.
FiniteWord rep_ic(const PositionalSystem& sys, unsigned p, unsigned i, const Integer& c, std::size_t n);
// Every word of L_U of length ≤ max_len, zero-padded.
std::set<FiniteWord> oracle_language(const PositionalSystem& sys, std::size_t max_len);
// max over n < horizon of ⌈U_{n+1}/U_n⌉ − 1.
Digit alphabet_max(const PositionalSystem& sys, std::size_t horizon = 200);

}  // namespace numsys
