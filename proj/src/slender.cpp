#include "numsys/slender.hpp"

#include <algorithm>

#include "numsys/algebra/sequence.hpp"

namespace numsys {

std::size_t SlenderDecomposition::period() const { return pieces.empty() ? 0 : pieces.front().y.size(); }

std::size_t SlenderDecomposition::start() const {
  std::size_t s = SIZE_MAX;
  for (const auto& pc : pieces) s = std::min(s, pc.x.size() + pc.z.size());
  return pieces.empty() ? 0 : s;
}

std::vector<FiniteWord> SlenderDecomposition::words_of_length(std::size_t n) const {
  std::vector<FiniteWord> out;
  for (const auto& f : finite)
    if (f.size() == n) out.push_back(f);
  for (const auto& pc : pieces) {
    std::size_t base = pc.x.size() + pc.z.size();
    std::size_t d = pc.y.size();
    if (n < base) continue;
    if (d == 0) {
      if (n == base) out.push_back(pc.x + pc.z);
      continue;
    }
    if ((n - base) % d == 0) out.push_back(pc.x + power(pc.y, (n - base) / d) + pc.z);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void SlenderDecomposition::check_thin(std::size_t horizon) const {
  std::size_t d = period();
  for (const auto& pc : pieces)
    if (pc.y.size() != d || d == 0) throw InvalidCandidate("every y_j must be nonempty with the same length");
  for (std::size_t n = 0; n <= horizon; ++n) {
    auto ws = words_of_length(n);
    if (ws.size() != 1)
      throw InvalidCandidate("length " + std::to_string(n) + " carries " + std::to_string(ws.size()) +
                             " words instead of exactly one");
  }
}

CandidateSystem system_from_max_words(const SlenderDecomposition& m) {
  std::size_t d = m.period();
  std::size_t horizon = 0;
  for (const auto& f : m.finite) horizon = std::max(horizon, f.size() + 1);
  for (const auto& pc : m.pieces) horizon = std::max(horizon, pc.x.size() + pc.z.size() + 3 * d);
  horizon = std::max(horizon, m.start() + 3 * d);
  m.check_thin(horizon);

  std::vector<FiniteWord> w(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    w[n] = m.words_of_length(n).front();
    if (n > 0 && w[n][0] == 0)
      throw InvalidCandidate("the word of length " + std::to_string(n) + " starts with 0");
  }
  for (std::size_t l = 1; l <= horizon; ++l)
    for (std::size_t n = 1; n < l; ++n)
      if (w[l].suffix(n) > w[n])
        throw InvalidCandidate("suffix of length " + std::to_string(n) + " of the word of length " +
                               std::to_string(l) + " exceeds the word of length " + std::to_string(n));

  // U_n = val(w_n) + 1, computed with the terms found so far.
  std::size_t count = std::max<std::size_t>(2 * horizon, 64);
  std::vector<Integer> u{Integer(1)};
  for (std::size_t n = 1; n < count; ++n) {
    FiniteWord word = n <= horizon ? w[n] : m.words_of_length(n).at(0);
    Integer v = 0;
    for (std::size_t k = 0; k < n; ++k) v += u[k] * word[n - 1 - k];
    u.push_back(v + 1);
  }
  IntPolynomial mp;
  try {
    mp = algebra::min_poly_of_sequence(u, 0, count / 2 - 8);
  } catch (const algebra::NoRecurrenceFound& e) {
    throw InvalidCandidate(std::string("no linear recurrence fits the generated terms: ") + e.what());
  }
  if (mp.leading() != 1) throw InvalidCandidate("the generated terms satisfy no integer recurrence");
  std::size_t order = static_cast<std::size_t>(mp.degree());
  if (order == 0) throw InvalidCandidate("degenerate candidate");
  std::vector<Integer> rec(order);
  for (std::size_t j = 0; j < order; ++j) rec[order - 1 - j] = -mp.coeff(j);
  std::vector<Integer> init(u.begin(), u.begin() + order);
  PositionalSystem sys(rec, init);
  for (std::size_t n = 0; n < count; ++n)
    if (sys.term(n) != u[n]) throw InvalidCandidate("fitted recurrence disagrees with generated terms");
  return {std::move(sys), horizon, std::move(u)};
}

}  // namespace numsys
