#ifndef PONCELET_CORE_ERROR_HPP
#define PONCELET_CORE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  ZeroPolynomial,
  DegreeZero,
  DegenerateQuadruple,
  DegenerateTriple,
  SingularMatrix,
  InvalidConfig,
  ClusteredRoots,
  ClosureViolation,
  DegeneratePyramid,
  DegenerateContact,
  DependentPencil,
  BadSecondForm,
  ChartFailure,
  AsymmetricInput,
  RewriteFailure,
  DegenerateRestriction,
  ClusteredParams,
  ContainsDiagonal,
  RankDeviation,
  NonRealConfiguration,
  SchemaError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ClusteredRoots: return "ClusteredRoots";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::DegeneratePyramid: return "DegeneratePyramid";
    case ErrorCode::DegenerateContact: return "DegenerateContact";
    case ErrorCode::DependentPencil: return "DependentPencil";
    case ErrorCode::BadSecondForm: return "BadSecondForm";
    case ErrorCode::ChartFailure: return "ChartFailure";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::RewriteFailure: return "RewriteFailure";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::ClusteredParams: return "ClusteredParams";
    case ErrorCode::ContainsDiagonal: return "ContainsDiagonal";
    case ErrorCode::RankDeviation: return "RankDeviation";
    case ErrorCode::NonRealConfiguration: return "NonRealConfiguration";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code; every library failure is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace poncelet

#endif  // PONCELET_CORE_ERROR_HPP
