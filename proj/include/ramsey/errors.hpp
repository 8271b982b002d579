#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

struct RamseyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required table cell is absent when deriving method parameters.
struct MissingPremise : RamseyError {
  using RamseyError::RamseyError;
};

// Merged seed records yield lower > upper.
struct InconsistentSeed : RamseyError {
  using RamseyError::RamseyError;
};

struct MalformedRecord : RamseyError {
  using RamseyError::RamseyError;
};

// A derived upper bound fell below a seeded lower bound; since every
// method is sound this can only mean the seeds were bad.
struct InconsistencyDetected : RamseyError {
  using RamseyError::RamseyError;
};

struct CeilingExceeded : RamseyError {
  using RamseyError::RamseyError;
};

struct ArithmeticOverflow : RamseyError {
  using RamseyError::RamseyError;
};

}  // namespace ramsey
