#pragma once

#include <stdexcept>
#include <string>

namespace luxdec {

/// Violation of an input contract (bad arguments, malformed files, mismatched shapes).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / serialization failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace luxdec
