#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triodrot {

enum class ErrorKind {
  MalformedDocument,
  DuplicateLabel,
  NotSingleCycle,
  BadBranchIndex,
  EmptyPattern,
  UnknownPoint,
  NoCanonicalOrdering,
  BranchEmpty,
  CodeUndefinedAtOneThird,
  NotStronglyConnected,
  CapExceeded,
  CoverBroken,
  BadRho,
  GlueFailed,
  BadMultiplicity,
  Overflow,
};

std::string_view error_name(ErrorKind kind);

// All domain failures surface as this exception; the message names the
// offending label or field.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotSingleCycle: return "NotSingleCycle";
    case ErrorKind::BadBranchIndex: return "BadBranchIndex";
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NoCanonicalOrdering: return "NoCanonicalOrdering";
    case ErrorKind::BranchEmpty: return "BranchEmpty";
    case ErrorKind::CodeUndefinedAtOneThird: return "CodeUndefinedAtOneThird";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::CoverBroken: return "CoverBroken";
    case ErrorKind::BadRho: return "BadRho";
    case ErrorKind::GlueFailed: return "GlueFailed";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace triodrot
