#pragma once

#include <stdexcept>
#include <string>

namespace mr6v {

/// Machine-readable precondition / domain violations. The names are part of
/// the CLI contract: they are printed verbatim on stderr with exit code 2.
enum class Violation {
  NonSquare,
  Singular,
  ZeroCrossing,
  TraceZero,
  DistinctnessViolation,
  PoleHit,
  NotSquare,
  BetaOne,
  BadK,
  DegreeViolation,
  DomainViolation,
  NonPositiveTrace,
  LatticeTooLarge,
  ParseError,
};

constexpr const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NonSquare: return "NonSquare";
    case Violation::Singular: return "Singular";
    case Violation::ZeroCrossing: return "ZeroCrossing";
    case Violation::TraceZero: return "TraceZero";
    case Violation::DistinctnessViolation: return "DistinctnessViolation";
    case Violation::PoleHit: return "PoleHit";
    case Violation::NotSquare: return "NotSquare";
    case Violation::BetaOne: return "BetaOne";
    case Violation::BadK: return "BadK";
    case Violation::DegreeViolation: return "DegreeViolation";
    case Violation::DomainViolation: return "DomainViolation";
    case Violation::NonPositiveTrace: return "NonPositiveTrace";
    case Violation::LatticeTooLarge: return "LatticeTooLarge";
    case Violation::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Violation code, const std::string& detail)
      : std::runtime_error(std::string(violation_name(code)) + ": " + detail),
        code_(code) {}

  Violation code() const noexcept { return code_; }
  const char* name() const noexcept { return violation_name(code_); }

 private:
  Violation code_;
};

}  // namespace mr6v
