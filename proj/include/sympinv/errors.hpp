#pragma once

#include <stdexcept>
#include <string>

namespace sympinv {

/// Thrown by lat() when a sign sequence has a negative prefix sum or a
/// nonzero total.
class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by lat() when a required letter magnitude exceeds the alphabet
/// bound n.
class AlphabetOverflowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the zero tensor is passed where a nonzero one is required.
class EmptyTensorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed its configured size budget.
/// required_budget() reports the budget that would be needed (saturated at
/// the maximum of long long).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, long long required)
      : std::runtime_error(what), required_budget_(required) {}

  long long required_budget() const { return required_budget_; }

 private:
  long long required_budget_;
};

}  // namespace sympinv
