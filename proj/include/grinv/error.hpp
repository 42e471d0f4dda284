#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grinv {

enum class ErrorKind {
  Singular,
  RankDeficient,
  IndexOutOfRange,
  ShapeMismatch,
  DegenerateSamplingExhausted,
  Degenerate,
  WrongKernelDimension,
  ZeroPatternViolation,
  UnsupportedCase,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported through this type; `kind()`
/// lets callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DegenerateSamplingExhausted: return "DegenerateSamplingExhausted";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::WrongKernelDimension: return "WrongKernelDimension";
    case ErrorKind::ZeroPatternViolation: return "ZeroPatternViolation";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace grinv
