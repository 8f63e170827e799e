#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hampath {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  MalformedGraph6,
  MalformedEdgeList,
  NotPermutation,
  LengthMismatch,
  TooLarge,
  TooSmall,
  SameVertex,
  EdgeNotInGraph,
  DomainError,
  TooFewEdges,
  EdgesNotDisjoint,
  BudgetZero,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::TooFewEdges: return "TooFewEdges";
    case ErrorKind::EdgesNotDisjoint: return "EdgesNotDisjoint";
    case ErrorKind::BudgetZero: return "BudgetZero";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI's exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hampath
