#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

enum class ErrorCode {
  WrongArity,
  InvalidInput,
  DegenerateSpectrum,
  IllConditioned,
  NonErgodic,
  NoConvergence,
  InvalidDensity,
  InsufficientData,
  GenericBranchMiss,
  NegativeDiscriminant,
  M3HypersurfaceMiss,
  NoBranchMatches,
  ZeroPivot,
  SingularSteadyState,
  DomainViolation,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NonErgodic: return "NonErgodic";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidDensity: return "InvalidDensity";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::GenericBranchMiss: return "GenericBranchMiss";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::M3HypersurfaceMiss: return "M3HypersurfaceMiss";
    case ErrorCode::NoBranchMatches: return "NoBranchMatches";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::SingularSteadyState: return "SingularSteadyState";
    case ErrorCode::DomainViolation: return "DomainViolation";
  }
  return "Unknown";
}

// True for errors meaning "the input is fine but no solution exists".
inline bool is_no_solution(ErrorCode c) {
  return c == ErrorCode::GenericBranchMiss || c == ErrorCode::NegativeDiscriminant ||
         c == ErrorCode::M3HypersurfaceMiss || c == ErrorCode::NoBranchMatches;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phasekit
