#pragma once

#include <stdexcept>
#include <string>

namespace glqec {

/// Requested problem size exceeds what the chosen backend can hold
/// (dense density matrices, exhaustive enumeration, packed bitstrings).
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glqec
