#pragma once

#include <stdexcept>
#include <string>

namespace patho {

/// A precondition on the mathematical input was violated (empty interval,
/// zero divisor, target outside an image, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed literal or file.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certified comparison could not be resolved within its precision budget.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace patho
