#pragma once

#include <stdexcept>
#include <string>

namespace ctube {

// Base for every error this library raises on bad input or a violated
// mathematical invariant.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarCountMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Raised by exact division when the quotient is not a Laurent polynomial
// with integer coefficients.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class NonRigidObject : public Error {
 public:
  using Error::Error;
};

class NotMaximalRigid : public Error {
 public:
  using Error::Error;
};

class NotASummand : public Error {
 public:
  using Error::Error;
};

class NodeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Internal invariant violation (a bug, or an input outside the model).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ctube
