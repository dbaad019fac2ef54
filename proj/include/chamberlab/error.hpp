#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chamberlab {

enum class ErrorCode {
  kInvalidMatrix,
  kCapExceeded,
  kLetterOutOfRange,
  kNotUnique,
  kNotAGallery,
  kDisconnected,
  kNonBuildingSystem,
  kInvalidFlag,
  kUnsupported,
  kWrongRank,
  kWrongMatrix,
  kTypeMismatch,
  kNotAClique,
  kParse,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` lets callers
// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chamberlab
