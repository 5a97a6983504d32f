#pragma once

#include <cstdint>
#include <random>

#include "stone/clopen.hpp"
#include "stone/ordinal.hpp"

namespace stone {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// A random ordinal below w^(w^w): up to four CNF terms whose exponents are
/// themselves random polynomials in w.
Ordinal random_ordinal(Rng& rng);

/// A random ordinal strictly below x (x > 0). Every ordinal below x has
/// positive probability when the CNF of x is shallow enough; limits and
/// successors are both produced.
Ordinal random_below(Rng& rng, const Ordinal& x);

/// A random point of the interval / set. The endpoints, the top-rank points
/// and interior points are all reachable.
Ordinal random_point(Rng& rng, const Interval& iv);
Ordinal random_point(Rng& rng, const ClopenSet& a);

/// A random point of rank gamma inside the interval (requires one to exist).
Ordinal random_rank_point(Rng& rng, const Interval& iv, const Ordinal& gamma);

/// A union of up to max_intervals random intervals of the space.
ClopenSet random_clopen(Rng& rng, const Space& space, int max_intervals = 4);

}  // namespace stone
