#pragma once

#include <stdexcept>
#include <string>

namespace torusjet {

/// Malformed or out-of-contract input (bad sizes, invalid resolutions, bad axis indices).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input for which the requested quantity is undefined,
/// e.g. a ratio whose denominator seminorm vanishes.
class DegenerateInput : public std::domain_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::domain_error(what) {}
};

}  // namespace torusjet
