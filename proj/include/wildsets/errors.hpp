#pragma once

#include <stdexcept>
#include <string>

namespace wildsets {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (elements, places, certificates, CLI flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong sizes, zero input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of a construction does not hold. The message
/// names the violated condition.
class Refusal : public Error {
 public:
  using Error::Error;
};

/// A bounded search (auxiliary places, witnesses) hit its degree cap.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// The class of a divisor is not zero in the Picard group.
class NotPrincipal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A freshly built certificate failed verification; this indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wildsets
