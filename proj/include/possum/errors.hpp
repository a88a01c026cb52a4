#pragma once

#include <stdexcept>
#include <string>

namespace possum {

/// Malformed or mismatched arguments: arity mismatch, bad text, parameters
/// outside a generator's range, size guard violations.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed arguments for which the requested mathematical object does not
/// exist (non-comparable partitions, negative coefficients where a
/// nonnegative polynomial is required, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace possum
