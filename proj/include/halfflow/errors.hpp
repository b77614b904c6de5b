#pragma once

#include <stdexcept>
#include <string>

namespace halfflow {

// Base of every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two terminals joined by an edge: the flow value is unbounded.
class UnboundedInstance : public Error {
 public:
  using Error::Error;
};

class InfeasiblePotential : public Error {
 public:
  using Error::Error;
};

class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

class NotInBase : public Error {
 public:
  using Error::Error;
};

// An augmenting path of infinite residual capacity exists.
class UnboundedFlow : public Error {
 public:
  using Error::Error;
};

class NotOptimalYet : public Error {
 public:
  using Error::Error;
};

class NormalizationFailed : public Error {
 public:
  using Error::Error;
};

class PatternError : public Error {
 public:
  using Error::Error;
};

class InfiniteCut : public Error {
 public:
  using Error::Error;
};

class SupportInconsistent : public Error {
 public:
  using Error::Error;
};

class NoCleanBand : public Error {
 public:
  using Error::Error;
};

class InfeasibleDual : public Error {
 public:
  using Error::Error;
};

// Exhaustive search would exceed its work budget.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace halfflow
