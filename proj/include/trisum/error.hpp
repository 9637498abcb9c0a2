#pragma once

#include <stdexcept>
#include <string>

namespace trisum {

// Base for every failure the library reports. Callers that only need to
// distinguish "bad input" from "numerical breakdown" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (e.g. lambda on [0,1]).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The cubic x(1-x)^2 - z has a (near-)repeated root.
class RepeatedRoots : public DomainError {
 public:
  using DomainError::DomainError;
};

// Jet division by a series whose constant term vanishes.
class SingularDivision : public Error {
 public:
  using Error::Error;
};

// Series parameters outside the region of convergence.
class NonConvergent : public DomainError {
 public:
  using DomainError::DomainError;
};

// Series summation hit the term cap before reaching the requested tolerance.
class TooManyTerms : public Error {
 public:
  using Error::Error;
};

// Quadrature error estimate stagnated above tolerance at the maximum level.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class UnknownConstant : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trisum
