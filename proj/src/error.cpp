#include "stone/error.hpp"

namespace stone {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Underflow: return "Underflow";
    case ErrorCode::NotALimit: return "NotALimit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::PointOutsideAmbient: return "PointOutsideAmbient";
    case ErrorCode::NoPointOfRank: return "NoPointOfRank";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::RankZeroSpace: return "RankZeroSpace";
    case ErrorCode::NotSuccessorRank: return "NotSuccessorRank";
    case ErrorCode::PayloadNotInPart: return "PayloadNotInPart";
    case ErrorCode::PayloadContainsMaximalPoint: return "PayloadContainsMaximalPoint";
    case ErrorCode::PayloadWrongCharPair: return "PayloadWrongCharPair";
    case ErrorCode::WindowTouchesMaximalPoint: return "WindowTouchesMaximalPoint";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotHomeomorphic: return "NotHomeomorphic";
    case ErrorCode::EmptySets: return "EmptySets";
    case ErrorCode::PointNotInDomain: return "PointNotInDomain";
    case ErrorCode::PieceMismatch: return "PieceMismatch";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotLimitRank: return "NotLimitRank";
    case ErrorCode::ImageNotGoodPartition: return "ImageNotGoodPartition";
    case ErrorCode::RankTooHigh: return "RankTooHigh";
  }
  return "Unknown";
}

}  // namespace stone
