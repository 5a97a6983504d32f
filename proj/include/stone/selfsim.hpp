#pragma once

#include <optional>
#include <vector>

#include "stone/clopen.hpp"
#include "stone/homeo.hpp"
#include "stone/random.hpp"

namespace stone {

/// The partition graph of a self-similar space X_{alpha,1}. A reference
/// clopen partition P_0, ..., P_k fixes the template of characteristic
/// pairs; P_0 is the piece of rank alpha.
struct SelfSimConfig {
  Space space;
  std::vector<CharPair> pieces;
};

/// Throws ConfigMismatch unless n = 1, the first pair is (alpha, 1), there
/// is at least one further piece and every further pair is nonempty with
/// rank below alpha.
void validate(const SelfSimConfig& config);

/// The template read off a reference partition.
SelfSimConfig config_from(const std::vector<ClopenSet>& reference);

/// A vertex: a clopen partition whose pieces match the template pairwise.
struct SelfSimVertex {
  std::vector<ClopenSet> pieces;
  friend bool operator==(const SelfSimVertex&, const SelfSimVertex&) = default;
};

/// Throws ConfigMismatch when v is not a vertex for config.
void validate(const SelfSimConfig& config, const SelfSimVertex& v);

/// Q ~ Q2 when Q_1 + ... + Q_k lies inside Q2_0 (equivalently the other way
/// round). Throws ConfigMismatch on differing piece counts or ambients.
bool ss_adjacent(const SelfSimVertex& q, const SelfSimVertex& q2);

enum class PathBranch { Trivial, Direct, CommonNeighbor, Detour };

const char* to_string(PathBranch b);

struct SelfSimPath {
  std::vector<SelfSimVertex> vertices;
  PathBranch branch = PathBranch::Trivial;
  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// A path of length at most 3. The middle vertex of a length-2 path carves
/// copies of the template pieces, left to right, out of Q_0 & Q2_0; only if
/// that fails does it fall back to detour_path.
SelfSimPath short_path(const SelfSimConfig& config, const SelfSimVertex& q, const SelfSimVertex& q2);

/// Q, M1, M2, Q2 with M1's pieces carved from Q_0 \ Q2_0 and M2's from
/// Q2_0 \ Q_0, when both have room for the template.
std::optional<SelfSimPath> detour_path(const SelfSimConfig& config, const SelfSimVertex& q, const SelfSimVertex& q2);

/// The involution exchanging Q_i and Q2_i for i >= 1 and fixing Q_0 & Q2_0
/// pointwise. Throws NotAdjacent.
Homeomorphism edge_involution(const SelfSimVertex& q, const SelfSimVertex& q2);

/// A pseudo-random vertex: each template piece is carved from a random
/// clopen region of what is left.
SelfSimVertex random_vertex(Rng& rng, const SelfSimConfig& config);

}  // namespace stone
