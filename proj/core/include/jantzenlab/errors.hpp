#pragma once

#include <stdexcept>
#include <string>

namespace jantzenlab {

/// Raised when an internal invariant is violated. Always indicates a bug
/// (or a violated theorem), never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Throws InternalError with `msg` unless `cond` holds.
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace jantzenlab
