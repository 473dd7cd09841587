#pragma once

#include <stdexcept>
#include <string>

namespace tropsym {

/// Stable machine-readable error codes. The CLI maps these to exit codes and
/// to the "code" field of its error JSON.
enum class ErrorCode {
  kDimensionMismatch,
  kInfInverse,
  kNegativeExponentAtInf,
  kSyntax,
  kUnknownVariable,
  kNotSymmetric,
  kResourceCap,
  kInvalidArgument,
  kDecompositionFailed,
  kInternal,
};

const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(ErrorCode::kSyntax, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tropsym
