#pragma once

#include <stdexcept>
#include <string>

namespace fdomain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two evaluations of the same closed form disagree. Never expected; signals a bug.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Equivalent membership criteria classified a point differently beyond tolerance.
class CriteriaDisagree : public Error {
 public:
  using Error::Error;
};

class OptimizerNoConverge : public Error {
 public:
  using Error::Error;
};

class DenominatorNearZero : public Error {
 public:
  using Error::Error;
};

class InfeasibleConstraint : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace fdomain
