#pragma once

#include <stdexcept>
#include <string>

namespace forestnet {

enum class ErrorCode {
  CycleDetected,
  Disconnected,
  RootOutdegreeOne,
  NonSemiBinaryHybrid,
  UnlabeledLeaf,
  DuplicateLabel,
  ParallelArc,
  UnknownVertex,
  UnknownArc,
  LabelSetMismatch,
  ContractionHitsLeafPair,
  NotSingleRoot,
  NotBinary,
  TooFewLeaves,
  InvalidCertificate,
  LeafSetMismatch,
  SingleRoot,
  NotTwoRooted,
  NotSemiBinary,
  NotArboreal,
  ResourceExhausted,
  NotAHierarchy,
  PropertiesViolated,
  PreconditionViolated,
  TooLarge,
  InfeasibleParams,
  RejectionBudgetExhausted,
  SyntaxError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RootOutdegreeOne: return "RootOutdegreeOne";
    case ErrorCode::NonSemiBinaryHybrid: return "NonSemiBinaryHybrid";
    case ErrorCode::UnlabeledLeaf: return "UnlabeledLeaf";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ParallelArc: return "ParallelArc";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::LabelSetMismatch: return "LabelSetMismatch";
    case ErrorCode::ContractionHitsLeafPair: return "ContractionHitsLeafPair";
    case ErrorCode::NotSingleRoot: return "NotSingleRoot";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::TooFewLeaves: return "TooFewLeaves";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::LeafSetMismatch: return "LeafSetMismatch";
    case ErrorCode::SingleRoot: return "SingleRoot";
    case ErrorCode::NotTwoRooted: return "NotTwoRooted";
    case ErrorCode::NotSemiBinary: return "NotSemiBinary";
    case ErrorCode::NotArboreal: return "NotArboreal";
    case ErrorCode::ResourceExhausted: return "ResourceExhausted";
    case ErrorCode::NotAHierarchy: return "NotAHierarchy";
    case ErrorCode::PropertiesViolated: return "PropertiesViolated";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::RejectionBudgetExhausted: return "RejectionBudgetExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace forestnet
