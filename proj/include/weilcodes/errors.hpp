#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weilcodes {

/// Base class for all library errors; `what()` carries a human readable message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositeP : public Error {
 public:
  using Error::Error;
};

class ReducibleModulus : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroA : public Error {
 public:
  using Error::Error;
};

class OddQuotient : public Error {
 public:
  using Error::Error;
};

class WrongRegime : public Error {
 public:
  using Error::Error;
};

/// Raised when a spec falls outside every theorem case. Unreachable for valid specs.
class UnmatchedCase : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(required) + " codewords, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace weilcodes
