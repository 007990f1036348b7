#pragma once

#include <stdexcept>
#include <string>

namespace zsum {

enum class ErrorKind {
  InvalidFactor,        // group factor <= 1
  IncompatibleElement,  // element rank mismatch
  GroupTooLarge,        // order exceeds an enumeration cap
  LengthCap,            // sequence longer than the DP cap
  InvalidSpec,          // malformed length-spec parameters
  InvalidIndex,         // invariant index out of range
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zsum
