#pragma once

#include <stdexcept>
#include <string>

namespace digitop {

enum class ErrorCode {
  self_loop,
  unknown_point,
  duplicate_point,
  point_collision,
  empty_space,
  empty_subspace,
  size_cap_exceeded,
  not_simple,
  not_simple_edge,
  not_adjacent,
  already_adjacent,
  rim_not_contractible,
  not_simple_pair,
  precondition_violated,
  parse_error,
  invalid_spec,
};

const char* error_code_name(ErrorCode code);

// Single exception type for all module errors; `code()` identifies the
// condition, the message carries the offending labels / sizes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace digitop
