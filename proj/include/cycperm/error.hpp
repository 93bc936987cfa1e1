#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cycperm {

/// Base class for every precondition or domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded enumeration or search ran out of budget. Carries whatever
/// lower bound the partial work established (group order, element count).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t partial_bound)
      : Error(what), partial_bound_(partial_bound) {}

  std::uint64_t partial_bound() const noexcept { return partial_bound_; }

 private:
  std::uint64_t partial_bound_;
};

}  // namespace cycperm
