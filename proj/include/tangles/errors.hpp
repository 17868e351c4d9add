#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

enum class ErrorKind {
  SameUnderlyingSeparation,
  DuplicateSeparation,
  UnknownLabel,
  NonAntisymmetricQuery,
  AlreadyOriented,
  InvalidSeed,
  NotAStarSystem,
  MissingTraceEntry,
  NotCrossing,
  NotDistinguishing,
  InvalidReplacement,
  UnknownTangle,
  NoDistinguisher,
  CapExceeded,
  StepBudgetExceeded,
  MalformedInstance,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SameUnderlyingSeparation: return "SameUnderlyingSeparation";
    case ErrorKind::DuplicateSeparation: return "DuplicateSeparation";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NonAntisymmetricQuery: return "NonAntisymmetricQuery";
    case ErrorKind::AlreadyOriented: return "AlreadyOriented";
    case ErrorKind::InvalidSeed: return "InvalidSeed";
    case ErrorKind::NotAStarSystem: return "NotAStarSystem";
    case ErrorKind::MissingTraceEntry: return "MissingTraceEntry";
    case ErrorKind::NotCrossing: return "NotCrossing";
    case ErrorKind::NotDistinguishing: return "NotDistinguishing";
    case ErrorKind::InvalidReplacement: return "InvalidReplacement";
    case ErrorKind::UnknownTangle: return "UnknownTangle";
    case ErrorKind::NoDistinguisher: return "NoDistinguisher";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::MalformedInstance: return "MalformedInstance";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tangles
