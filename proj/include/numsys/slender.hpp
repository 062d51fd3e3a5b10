#pragma once
// Thin languages written as F ∪ ⋃_j x_j y_j* z_j, and the system they determine as maximal words.

#include <optional>
#include <vector>

#include "numsys/numeration.hpp"

namespace numsys {

struct SlenderPiece {
  FiniteWord x, y, z;
};

struct SlenderDecomposition {
  std::vector<FiniteWord> finite;
  std::vector<SlenderPiece> pieces;

  // Common |y_j|; 0 when there are no pieces.
  std::size_t period() const;
  // Length at which the pieces take over (min |x_j z_j|); lengths below it are covered by `finite`.
  std::size_t start() const;
  // All words of length n.
  std::vector<FiniteWord> words_of_length(std::size_t n) const;
  // Throws InvalidCandidate when |y_j| differ or some length up to `horizon` carries ≠ 1 word.
  void check_thin(std::size_t horizon) const;
};

struct CandidateSystem {
  PositionalSystem system;
  std::size_t validated_to;     // the Lemma conditions were checked on all lengths ≤ this
  std::vector<Integer> terms;   // U_0 … as generated from the words
};

// Builds the numeration system whose maximal words are the words of `m`.
CandidateSystem system_from_max_words(const SlenderDecomposition& m);

}  // namespace numsys
