#pragma once

#include <stdexcept>
#include <string>

namespace tlr {

/// Bad input: malformed files, out-of-range parameters, contract violations.
/// Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact routine was asked to enumerate more than the configured guard
/// allows. Maps to CLI exit code 3.
class GuardError : public std::runtime_error {
  public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tlr
