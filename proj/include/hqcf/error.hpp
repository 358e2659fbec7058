#pragma once

#include <stdexcept>
#include <string>

namespace hqcf {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters: p not prime, t == 0, r too small for a family,
// malformed seed words, unparsable input.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// A working-precision cap was exhausted before the requested number of
// partial quotients could be certified.
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

// Cross-checked expansion routes disagree.
struct MismatchError : Error {
  explicit MismatchError(const std::string& what) : Error(what) {}
};

// A transition step hit a state outside its contract: a degree guard
// failed, a divisibility hypothesis does not hold, or a state is not
// covered by the closed rule table.
struct StepError : Error {
  explicit StepError(const std::string& what) : Error(what) {}
};

}  // namespace hqcf
