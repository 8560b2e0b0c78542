#pragma once

#include <stdexcept>
#include <string>

namespace kpfree {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (bad vertex id, spec that does
/// not match the graph, hypothesis of a procedure not met).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An exact search was refused because the instance exceeds the configured
/// SearchBudget, or the time cap expired.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural claim the constructive procedures rely on did not hold.
/// Raised by the exchange procedure when one of its per-step checks fails.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A result failed independent re-certification. Always a bug signal.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace kpfree
