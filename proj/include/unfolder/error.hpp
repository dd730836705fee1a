#pragma once

#include <stdexcept>
#include <string>

namespace unfolder {

enum class ErrorCode {
  MixedDimension,
  DegenerateFacet,
  SelfIdentification,
  BadGluing,
  NotSimplicial,
  NotAFace,
  NotAFacet,
  InvalidPath,
  NotStronglyConnected,
  NotLocallyStronglyConnected,
  DegenerateMap,
  IsomorphismNotFound,
  Mismatch,
  BaseNotNice,
  DimensionMismatch,
  BadParameter,
  ParseError,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unfolder
