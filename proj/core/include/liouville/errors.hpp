#pragma once

#include <stdexcept>
#include <string>

namespace liouville {

/// Bad shapes, out-of-range indices, zero vectors where nonzero is required.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of a construction does not hold
/// (e.g. a quadratic automorphism witness that does not map a to ±a).
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two structures belong to families this library does not relate.
class UnsupportedPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No isomorphism can exist between the two structures.
class ObstructionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The supplied map does not pull the Liouville form back to itself.
class NotAnAutomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact computation contradicted the classification of automorphisms.
/// Never expected to fire; raised instead of returning a wrong answer.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed command-line input or configuration.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace liouville
