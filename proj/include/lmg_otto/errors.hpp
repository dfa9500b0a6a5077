#pragma once

#include <stdexcept>
#include <string>

namespace lmg_otto {

enum class ErrorKind {
  invalid_parameter,
  invalid_temperature,
  bath_order,
  label_mismatch,
  non_convergence,
  invalid_bracket,
  variant_mismatch,
  baseline_zero,
  no_engine_point,
  unknown_preset,
  usage,
  io,
};

// Coarse buckets used by the command-line front end to pick an exit code.
enum class ErrorCategory { usage, numeric, io };

inline ErrorCategory category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter:
    case ErrorKind::invalid_temperature:
    case ErrorKind::bath_order:
    case ErrorKind::invalid_bracket:
    case ErrorKind::variant_mismatch:
    case ErrorKind::unknown_preset:
    case ErrorKind::usage:
      return ErrorCategory::usage;
    case ErrorKind::io:
      return ErrorCategory::io;
    default:
      return ErrorCategory::numeric;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lmg_otto
