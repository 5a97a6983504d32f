#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stone/clopen.hpp"

namespace stone {

/// A good partition of X_{alpha,n}: parts[i] is the clopen set holding the
/// maximal point w^alpha * (i+1). Parts are indexed by their maximal point,
/// never reordered.
struct GoodPartition {
  Space space;
  std::vector<ClopenSet> parts;

  friend bool operator==(const GoodPartition&, const GoodPartition&) = default;
};

/// Move `payload` out of parts[from] into parts[to] (0-based indices).
struct ShiftMove {
  std::size_t from = 0;
  std::size_t to = 0;
  ClopenSet payload;

  friend bool operator==(const ShiftMove&, const ShiftMove&) = default;
};

enum class Violation {
  None,
  WrongPartCount,
  AmbientMismatch,
  Overlap,
  GapUncovered,
  MaximalPointCount,
  CharPairMismatch,
};

std::string to_string(Violation v);

struct ValidationReport {
  Violation kind = Violation::None;
  std::size_t part = 0;   // first offending part (0-based)
  std::size_t other = 0;  // second part for Overlap
  std::string detail;

  bool ok() const noexcept { return kind == Violation::None; }
};

/// P_1 = [0, w^a], P_i = (w^a (i-1), w^a i]. Throws RankZeroSpace for a = 0.
GoodPartition basepoint(const Space& space);

/// Reports the first failed invariant: disjointness, cover, one maximal
/// point per part, pair (alpha, 1) per part.
ValidationReport validate(const GoodPartition& p);

/// alpha = beta + 1; returns beta. Throws NotSuccessorRank otherwise.
Ordinal shift_rank(const Space& space);

/// Applies a maximal shift. Throws NotSuccessorRank, PayloadNotInPart,
/// PayloadContainsMaximalPoint or PayloadWrongCharPair.
GoodPartition shift(const GoodPartition& p, const ShiftMove& m);

/// The witnessing move when q = shift(p, m) for some maximal shift m.
std::optional<ShiftMove> is_adjacent(const GoodPartition& p, const GoodPartition& q);

/// Starts from the basepoint and hands each canonical chunk of the window
/// (the units of each of its intervals) to a pseudo-random part. The same
/// seed always yields the same partition. Throws WindowTouchesMaximalPoint.
GoodPartition random_partition(const Space& space, const ClopenSet& window, std::uint64_t seed);

/// The index of the part containing x.
std::size_t owner(const GoodPartition& p, const Ordinal& x);

std::string to_string(const GoodPartition& p);
/// Parts separated by ';', each in the clopen text form.
GoodPartition parse_partition(const Space& space, std::string_view text);

}  // namespace stone
