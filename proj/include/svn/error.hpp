#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph-core
class SizeTooSmall : public Error {
 public:
  using Error::Error;
};

class EmptyOperand : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

// coloring
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidColoring : public Error {
 public:
  using Error::Error;
};

// oracle: carries the best bounds established before the budget ran out.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower, std::size_t upper)
      : Error(what), lower_(lower), upper_(upper) {}

  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

// closed-form
class OutOfTheoremRange : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class ConstructionInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace svn
