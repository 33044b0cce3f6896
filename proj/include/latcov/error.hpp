#pragma once

#include <stdexcept>
#include <string>

namespace latcov {

/// Raised for precondition violations and malformed input anywhere in the
/// library. The message is a single line suitable for a CLI diagnostic.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latcov
