#pragma once

#include <stdexcept>
#include <string>

namespace annular {

/// Raised when an enumeration would exceed its configured size limit.
/// Enumerations never truncate silently.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input lies outside the domain of a map (for example a
/// tuple that is not a member of the set the map is defined on).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant. Seeing one of these means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace annular
