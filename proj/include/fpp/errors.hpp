#pragma once

#include <stdexcept>
#include <string>

namespace fpp {

/// Input outside the domain of an operation (zero divisor, non-integral
/// entry, wrong place, malformed file, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A 2-adic computation needs more bits than the caller supplied. Callers
/// retry at a higher precision.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpp
