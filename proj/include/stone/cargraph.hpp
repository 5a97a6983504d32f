#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stone/partition.hpp"

namespace stone {

/// The shift graph Gamma(alpha, n) for successor alpha = beta + 1: vertices
/// are good partitions, edges are maximal shifts. The vertex set is infinite
/// and never materialized; everything here works on explicit pairs.

struct Path {
  GoodPartition start;
  std::vector<ShiftMove> moves;

  std::size_t length() const noexcept { return moves.size(); }
  /// start, shift(start, m0), ... ; each step re-validates the move.
  std::vector<GoodPartition> vertices() const;
  GoodPartition end() const;
};

/// lower = defect, upper = length of the constructed path, exact = BFS
/// distance when it was computed (rank-one spaces only).
struct DistanceCertificate {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;
  Path path;
};

/// Number of rank-beta points on which p and q disagree, i.e. the rank-beta
/// points of X minus the union of the p_i & q_i. Each shift changes it by at
/// most one, so it bounds the graph distance from below.
std::uint64_t defect(const GoodPartition& p, const GoodPartition& q);

/// Walks from p to q one ordered pair of parts (i, j) at a time, in
/// lexicographic order, clearing p_i & q_j:
///  - when it holds d > 0 rank-beta points, shift its d units across;
///  - otherwise shift U = V + (p_i & q_j) across and V back, where V is the
///    canonical (beta, 1) unit at the leftmost rank-beta point of p_i \ q_j.
/// The result has length at most defect(p, q) + 2n(n-1).
Path connect_path(const GoodPartition& p, const GoodPartition& q);

/// Exact distance in Gamma(1, n) by breadth-first search over the owners of
/// the window's isolated points. Moves touching points outside the window can
/// be dropped from any geodesic (they never reduce disagreement with q), so
/// the windowed search is exact. Throws RankNotOne or WindowTooSmall.
std::uint64_t bfs_distance(const GoodPartition& p, const GoodPartition& q, const ClopenSet& window);

/// All partitions one window point away from p (rank-one spaces).
std::vector<GoodPartition> neighbors(const GoodPartition& p, const ClopenSet& window);

/// Bundles defect, connect_path and (when a window is given) bfs_distance.
DistanceCertificate certify(const GoodPartition& p, const GoodPartition& q,
                            const std::optional<ClopenSet>& window = std::nullopt);

/// The radius-r ball around p in the windowed graph as an undirected DOT
/// graph. Vertices are labelled by the window points whose owner differs from
/// the basepoint ("x->part"), edges by the moved point.
std::string ball_dot(const GoodPartition& p, const ClopenSet& window, std::uint64_t radius);

}  // namespace stone
