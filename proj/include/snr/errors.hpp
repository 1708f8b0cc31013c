#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace snr {

// Bad arguments: out-of-range parameters, mismatched lattices, malformed words.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A candidate (n,r)-function broke the monotone chain or the zero pin.
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An enumeration ran into its configured cap or size guard.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}

  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

}  // namespace snr
