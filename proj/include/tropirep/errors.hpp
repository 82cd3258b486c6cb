#pragma once

#include <stdexcept>
#include <string>

namespace tropirep {

// Error taxonomy shared by all modules.  The CLI maps these onto exit codes:
// ParseError -> 2, CapacityError -> 3, UnsupportedError -> 4,
// RankDeficientError -> 5.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (group specs, Cayley files, matrix JSON).
struct ParseError : Error {
  using Error::Error;
};

// A requested computation exceeds a configured size cap.
struct CapacityError : Error {
  using Error::Error;
};

// Valid request outside the supported feature set (e.g. character-based
// realizability for a non-abelian group).
struct UnsupportedError : Error {
  using Error::Error;
};

// A matrix whose maximal minors all vanish cannot be tropicalized.
struct RankDeficientError : Error {
  using Error::Error;
};

// Caller violated a documented precondition.
struct ContractError : Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug, never bad user input.
struct InternalError : Error {
  using Error::Error;
};

// A verified mathematical identity failed at runtime.  Should never fire;
// kept separate from InternalError so such a failure is unmistakable.
struct TheoremFalsificationError : InternalError {
  using InternalError::InternalError;
};

}  // namespace tropirep
