#pragma once

#include <stdexcept>
#include <string>

namespace qhall {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over incompatible symbol declarations, or an expression
// leaving the supported coefficient ring.
class DeclarationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a metric, equation or function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A coefficient was evaluated at one of its poles.
class SingularityError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Discretization too coarse to resolve the requested eigenvalues.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

class NonNormalizableError : public Error {
 public:
  using Error::Error;
};

class FitSingularError : public Error {
 public:
  using Error::Error;
};

class PauliViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qhall
