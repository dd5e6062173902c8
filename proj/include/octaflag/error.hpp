#pragma once

#include <stdexcept>

namespace octaflag {

/// Thrown when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace octaflag
