#pragma once

#include <stdexcept>
#include <string>

namespace leafsearch {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  OutOfRange,
  NotAPermutation,
  NotConnectedOrdering,
  NotAClique,
  PrefixNotRealized,
  BudgetExceeded,
  InvalidSequence,
  NotGSOrdering,
  DecompositionUnavailable,
  InvalidDecomposition,
  AssumptionViolated,
  MalformedClause,
  BadParameter,
  Parse,
  Unsupported,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library is reported with one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace leafsearch
