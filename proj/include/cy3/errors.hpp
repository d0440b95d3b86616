#ifndef CY3_ERRORS_HPP
#define CY3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cy3 {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Matrix shape does not fit the operation (e.g. determinant of a non-square matrix).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An argument is outside the operation's domain (non-prime modulus, k <= 0, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Operands live over different bases.
class StructuralError : public Error {
  public:
    using Error::Error;
};

/// A pairing that must be integral evaluated to a proper fraction.
class IntegralityError : public Error {
  public:
    using Error::Error;
};

/// Data violates a model invariant (surface consistency, combo cardinalities).
class ValidationError : public Error {
  public:
    using Error::Error;
};

class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Inputs to a certificate do not witness what the certificate claims.
class ContractViolation : public Error {
  public:
    using Error::Error;
};

/// Malformed polynomial text or model file.
class LoadError : public Error {
  public:
    using Error::Error;
};

}  // namespace cy3

#endif
