#pragma once

#include <stdexcept>
#include <string>

namespace expcong {

// Invalid parameters: n < 2, k = 0, composite where a prime is required, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The operation needs gcd(a, n) = 1 and was handed a non-unit.
class NotUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration or table size exceeds the configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction did not. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace expcong
