#pragma once

#include <optional>
#include <vector>

#include "stone/homeo.hpp"
#include "stone/partition.hpp"

namespace stone {

/// How the per-part ranks of P_i & Q_i combine. ExistsIndex takes the
/// largest rank seen in any part; AllIndices asks for a rank present in
/// every part, so one untouched part forces height 0.
enum class HeightMode { ExistsIndex, AllIndices };

const char* to_string(HeightMode m);

struct HeightReport {
  Ordinal h;
  /// max rank of each symmetric difference, nullopt when it is empty
  std::vector<std::optional<Ordinal>> per_part_max_rank;
  HeightMode mode = HeightMode::ExistsIndex;
};

/// Relative height of two good partitions of a limit-rank space. Throws
/// NotLimitRank or AmbientMismatch.
HeightReport height_report(const GoodPartition& p, const GoodPartition& q, HeightMode mode = HeightMode::ExistsIndex);
Ordinal rel_height(const GoodPartition& p, const GoodPartition& q, HeightMode mode = HeightMode::ExistsIndex);

/// g applied part by part, re-indexed by the maximal point each image holds.
/// Throws ImageNotGoodPartition.
GoodPartition apply(const Homeomorphism& g, const GoodPartition& p);

/// rel_height(p0, g p0): the least level whose stabilizer contains g.
Ordinal stab_level(const Homeomorphism& g, const GoodPartition& p0, HeightMode mode = HeightMode::ExistsIndex);

/// A map of the space carrying the canonical (beta', 1) copy of basepoint
/// part i over to part j (0-based) and matching everything else piece by
/// piece. Throws NotLimitRank or RankTooHigh.
Homeomorphism stab_witness(const Space& space, const Ordinal& beta_prime, std::size_t i, std::size_t j);

}  // namespace stone
