#pragma once

#include <stdexcept>
#include <string>

namespace entcoh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure-constant tables whose shapes or values are unusable.
struct MalformedInput : Error {
  using Error::Error;
};

// Two structures that should live over the same algebra/field do not.
struct MismatchError : Error {
  using Error::Error;
};

// An operation was invoked outside its stated precondition
// (e.g. translation map of a non-Galois extension).
struct PreconditionError : Error {
  using Error::Error;
};

struct InvalidSubalgebra : Error {
  using Error::Error;
};

// A dimension/entry count exceeded the configured cap.
struct ResourceLimit : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// An internal consistency assertion failed; indicates a bug upstream,
// not bad user input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace entcoh
