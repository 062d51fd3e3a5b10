#pragma once

#include <stdexcept>
#include <string>

namespace numsys {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIncreasing : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct InvalidSystem : Error {
  using Error::Error;
};
struct InvalidCandidate : Error {
  using Error::Error;
};
struct UnresolvedExpansion : Error {
  using Error::Error;
};
struct UndefinedIndex : Error {
  using Error::Error;
};
struct UndefinedIntermediate : Error {
  using Error::Error;
};
struct NotPeriodic : Error {
  using Error::Error;
};
struct DecompositionMismatch : Error {
  using Error::Error;
};
struct StateLimitExceeded : Error {
  using Error::Error;
};

}  // namespace numsys
