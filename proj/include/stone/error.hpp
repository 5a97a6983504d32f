#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stone {

enum class ErrorCode {
  // ordinal
  Underflow,
  NotALimit,
  SyntaxError,
  // clopen
  AmbientMismatch,
  PointOutsideAmbient,
  NoPointOfRank,
  EmptyInput,
  InvalidInterval,
  // partition
  RankZeroSpace,
  NotSuccessorRank,
  PayloadNotInPart,
  PayloadContainsMaximalPoint,
  PayloadWrongCharPair,
  WindowTouchesMaximalPoint,
  InvalidPartition,
  // cargraph
  RankNotOne,
  WindowTooSmall,
  // selfsim
  ConfigMismatch,
  NotAdjacent,
  // homeo
  NotHomeomorphic,
  EmptySets,
  PointNotInDomain,
  PieceMismatch,
  NotAPartition,
  // height
  NotLimitRank,
  ImageNotGoodPartition,
  RankTooHigh,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported as an Error carrying a
/// machine-readable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace stone
