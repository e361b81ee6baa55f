#pragma once

#include <stdexcept>
#include <string>

namespace hodgekp {

// Precondition or domain error: bad input, unsupported parameters.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity the engine relies on internally did not hold.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(const std::string& what, std::string diff = {})
      : std::runtime_error(what), diff_(std::move(diff)) {}
  const std::string& diff() const noexcept { return diff_; }

 private:
  std::string diff_;
};

}  // namespace hodgekp
