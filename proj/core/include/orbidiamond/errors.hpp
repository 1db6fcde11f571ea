#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbidiamond {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments that violate an operation's preconditions (mismatched moduli,
/// out-of-range exponents, components that do not belong to an element).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that only make sense when d = n + 1.
class NonCalabiYau : public Error {
 public:
  NonCalabiYau(int d, int n)
      : Error("operation requires a Calabi-Yau hypersurface (d = n + 1), got d=" +
              std::to_string(d) + ", n=" + std::to_string(n)) {}
};

/// Raised when an enumeration would exceed the configured element cap.
class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::uint64_t size, std::uint64_t cap)
      : Error("enumeration of " + std::to_string(size) +
              " elements exceeds the cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

}  // namespace orbidiamond
