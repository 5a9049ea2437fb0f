#pragma once

#include <stdexcept>
#include <string>

namespace corrpriv {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Distribution / channel validation.
struct NegativeProbability : Error { using Error::Error; };
struct SumNotOne : Error { using Error::Error; };
struct EmptyMarginal : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };

// Measures needing numeric embeddings.
struct MissingValues : Error { using Error::Error; };
struct DegenerateVariable : Error { using Error::Error; };

// Sample-based estimators.
struct TooFewSamples : Error { using Error::Error; };

// Stable-law parameters and privacy-noise design.
struct InvalidParams : Error { using Error::Error; };
struct EpsilonOutOfRange : Error { using Error::Error; };

// Bound checks.
struct DegenerateRho : Error { using Error::Error; };
struct AlphabetTooLarge : Error { using Error::Error; };

// File ingestion.
struct ParseError : Error { using Error::Error; };

}  // namespace corrpriv
