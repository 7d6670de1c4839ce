#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beads {

enum class ErrorKind {
  // configurations
  EmptyConfig,
  NotMonotone,
  DimensionMismatch,
  BasePointMismatch,
  InadmissibleSlide,
  IndexOutOfRange,
  // planner
  TooFewBeads,
  PreconditionOrder,
  PreconditionSlideable,
  InternalBoundExceeded,
  NonpositiveEpsilon,
  PatternMismatch,
  // majorization
  NotNondecreasing,
  NotConcave,
  NotConvex,
  BasePointNotZero,
  PreconditionDominance,
  PreconditionSorted,
  PreconditionTotals,
  DomainError,
  DerivativeUnavailable,
  // oracle
  BudgetExceeded,
  OffLattice,
  // parsing
  MalformedRational,
  NonCanonicalRational,
  MalformedInput,
  UnknownFunction,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyConfig: return "EmptyConfig";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BasePointMismatch: return "BasePointMismatch";
    case ErrorKind::InadmissibleSlide: return "InadmissibleSlide";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooFewBeads: return "TooFewBeads";
    case ErrorKind::PreconditionOrder: return "PreconditionOrder";
    case ErrorKind::PreconditionSlideable: return "PreconditionSlideable";
    case ErrorKind::InternalBoundExceeded: return "InternalBoundExceeded";
    case ErrorKind::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::NotNondecreasing: return "NotNondecreasing";
    case ErrorKind::NotConcave: return "NotConcave";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::BasePointNotZero: return "BasePointNotZero";
    case ErrorKind::PreconditionDominance: return "PreconditionDominance";
    case ErrorKind::PreconditionSorted: return "PreconditionSorted";
    case ErrorKind::PreconditionTotals: return "PreconditionTotals";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OffLattice: return "OffLattice";
    case ErrorKind::MalformedRational: return "MalformedRational";
    case ErrorKind::NonCanonicalRational: return "NonCanonicalRational";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
  }
  return "Unknown";
}

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace beads
