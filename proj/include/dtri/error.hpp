#pragma once

#include <stdexcept>
#include <string>

namespace dtri {

// Base for all library failures that carry domain meaning (as opposed to
// plain precondition violations, which throw std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial division left a nonzero remainder.
class NonDivisible : public Error {
 public:
  using Error::Error;
};

// A proven structural property (degree, leading coefficient, value at 1, ...)
// did not hold. Never expected to fire.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

// Quasi-polynomial interpolation disagreed with a verification sample.
class FitMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientSeed : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration requested beyond its hard size cap.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace dtri
