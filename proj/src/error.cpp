#include "unfolder/error.hpp"

namespace unfolder {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedDimension: return "MixedDimension";
    case ErrorCode::DegenerateFacet: return "DegenerateFacet";
    case ErrorCode::SelfIdentification: return "SelfIdentification";
    case ErrorCode::BadGluing: return "BadGluing";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotLocallyStronglyConnected: return "NotLocallyStronglyConnected";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::IsomorphismNotFound: return "IsomorphismNotFound";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::BaseNotNice: return "BaseNotNice";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace unfolder
