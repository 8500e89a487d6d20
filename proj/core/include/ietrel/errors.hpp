#pragma once

#include <stdexcept>
#include <string>

namespace ietrel {

/// A mathematical precondition or search failed (non-admissible permutation,
/// parameters that break the drift window, exhausted search cap).
class MathError : public std::runtime_error {
public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ietrel

namespace ietrel {

/// Malformed serialized input.
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ietrel
