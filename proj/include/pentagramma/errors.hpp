#pragma once

#include <stdexcept>
#include <string>

namespace pentagramma {

// Every failure raised by the library derives from Error. The CLI maps the
// concrete type onto its exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (k >= 1, non-positive alpha, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// A computed object failed one of its defining identities.
class InvariantError : public Error {
public:
  using Error::Error;
};

// omega below the critical value: (E) has a single real root.
class SubcriticalError : public Error {
public:
  using Error::Error;
};

class NearPoleError : public Error {
public:
  using Error::Error;
};

class OffEllipseError : public Error {
public:
  using Error::Error;
};

// Linear solve with a vanishing determinant.
class SingularError : public Error {
public:
  using Error::Error;
};

// Consecutive frame vectors are orthogonal, so tan^2 of the chord is infinite.
class ChordDegenerateError : public Error {
public:
  using Error::Error;
};

// Two-circle configuration violates the nesting constraints.
class GeometryError : public Error {
public:
  using Error::Error;
};

class NoTangentError : public Error {
public:
  using Error::Error;
};

class NoSolutionError : public Error {
public:
  using Error::Error;
};

} // namespace pentagramma
