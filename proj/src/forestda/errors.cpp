#include "forestda/errors.hpp"

namespace fda {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::HoleCount: return "HoleCountError";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::SizeLimit: return "SizeLimitExceeded";
    case ErrorCode::NotReachableRestricted: return "NotReachableRestricted";
    case ErrorCode::ElementUnrealized: return "ElementUnrealized";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::ForeignNode: return "ForeignNode";
    case ErrorCode::NotPrenex: return "NotPrenex";
    case ErrorCode::NotDA: return "NotDA";
    case ErrorCode::NotStratified: return "NotStratified";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Arg: return "ArgumentError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace fda
