#pragma once

#include <stdexcept>
#include <string>

namespace slopegap {

enum class ErrorKind {
  Parse,
  EmptySurface,
  NonTransitive,
  UnsupportedSurface,
  OrbitTooLarge,
  CandidateSearchExhausted,
  NotCertifiable,
  TilingGap,
  NoCandidate,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::EmptySurface: return "EmptySurface";
    case ErrorKind::NonTransitive: return "NonTransitive";
    case ErrorKind::UnsupportedSurface: return "UnsupportedSurface";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::CandidateSearchExhausted: return "CandidateSearchExhausted";
    case ErrorKind::NotCertifiable: return "NotCertifiable";
    case ErrorKind::TilingGap: return "TilingGap";
    case ErrorKind::NoCandidate: return "NoCandidate";
  }
  return "Error";
}

}  // namespace slopegap
