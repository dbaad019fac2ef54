#include "chamberlab/error.hpp"

namespace chamberlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidMatrix: return "invalid matrix";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kLetterOutOfRange: return "letter out of range";
    case ErrorCode::kNotUnique: return "not unique";
    case ErrorCode::kNotAGallery: return "not a gallery";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kNonBuildingSystem: return "non-building system";
    case ErrorCode::kInvalidFlag: return "invalid flag";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kWrongRank: return "wrong rank";
    case ErrorCode::kWrongMatrix: return "wrong matrix";
    case ErrorCode::kTypeMismatch: return "type mismatch";
    case ErrorCode::kNotAClique: return "not a clique";
    case ErrorCode::kParse: return "parse error";
  }
  return "unknown";
}

}  // namespace chamberlab
