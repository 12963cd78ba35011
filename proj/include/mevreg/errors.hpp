#pragma once

#include <stdexcept>
#include <string>

namespace mevreg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A named hypothesis of an identity or regulator formula does not hold,
// e.g. a parameter with a vanishing coordinate.
class BoundaryError : public DomainError {
 public:
  BoundaryError(const std::string& hypothesis, const std::string& detail)
      : DomainError(hypothesis + ": " + detail), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// Evaluation requested exactly at a pole without asking for the Laurent constant.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A truncation or convergence bound exceeded its budget.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mevreg
