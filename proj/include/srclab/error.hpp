#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srclab {

enum class ErrorKind {
  LoopEdge,
  VertexOutOfRange,
  MalformedGraph6,
  Disconnected,
  TooLarge,
  NotAPath,
  ColoringSizeMismatch,
  BudgetExceeded,
  Acyclic,
  InvalidPacking,
  NotUnicyclic,
  SchemeNotApplicable,
  SchemeVerificationFailed,
  GirthOutOfRange,
  NoSecondCycle,
  NotGBar,
  NotCubic,
  Usage,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::ColoringSizeMismatch: return "ColoringSizeMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Acyclic: return "Acyclic";
    case ErrorKind::InvalidPacking: return "InvalidPacking";
    case ErrorKind::NotUnicyclic: return "NotUnicyclic";
    case ErrorKind::SchemeNotApplicable: return "SchemeNotApplicable";
    case ErrorKind::SchemeVerificationFailed: return "SchemeVerificationFailed";
    case ErrorKind::GirthOutOfRange: return "GirthOutOfRange";
    case ErrorKind::NoSecondCycle: return "NoSecondCycle";
    case ErrorKind::NotGBar: return "NotGBar";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace srclab
