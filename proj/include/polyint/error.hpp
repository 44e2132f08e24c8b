#pragma once

#include <stdexcept>
#include <string>

namespace polyint {

// Base of every error raised by the library. Each subclass maps to a distinct
// CLI exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed integral names, expressions or table files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A relation system reduced to 0 = c with c != 0; always a generator bug.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

// A relation or closed form failed its numeric check.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

// An invariant of the engine itself broke (gamma leak, divergent term, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

// Requested work exceeds what the engine supports (weight, quadrature levels).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace polyint
