#pragma once

#include <stdexcept>
#include <string>

namespace ap3 {

enum class Errc {
  invalid_argument = 1,
  range = 2,
  budget = 3,
  io = 4,
  precondition = 5,
  internal = 6,
};

/// Library-wide exception carrying a coarse error class. The C API maps
/// Errc values onto ap3_status codes; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ap3
