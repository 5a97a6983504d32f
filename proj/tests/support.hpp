#pragma once

#include <string>
#include <vector>

#include "stone/clopen.hpp"
#include "stone/ordinal.hpp"
#include "stone/random.hpp"

namespace stone::testing {

inline Ordinal O(const char* text) { return parse_ordinal(text); }

inline ClopenSet C(const Space& sp, const char* text) { return parse_clopen(sp, text); }

// w^beta * q, assembled term by term with ordinal addition only. Kept apart
// from the library's mul_omega_pow so the two can check each other.
inline Ordinal omega_pow_times(const Ordinal& beta, const Ordinal& q) {
  Ordinal out;
  for (const auto& t : q.terms()) out = out + Ordinal::omega_pow(beta + t.exponent, t.coef);
  return out;
}

// Rank of x computed from first principles on a finite ordinal window:
// x is isolated iff it is 0 or a successor; otherwise the rank is the
// exponent of its smallest CNF term (independent of point_rank only in
// phrasing, so tests use it for finite points and brute-force scans).
inline bool is_isolated_point(const Ordinal& x) { return x.is_zero() || is_successor(x); }

}  // namespace stone::testing

#include "stone/partition.hpp"

namespace stone::testing {

// A union of k random intervals, each strictly between two consecutive
// maximal points, so it never touches one.
inline ClopenSet random_window(Rng& rng, const Space& sp, int k) {
  std::vector<Interval> ivs;
  for (int t = 0; t < k; ++t) {
    const std::uint64_t i = uniform(rng, 1, sp.n);
    const Ordinal top = sp.maximal_point(i);
    const Interval region{i == 1 ? std::nullopt : std::optional<Ordinal>(sp.maximal_point(i - 1)), top};
    Ordinal a = random_point(rng, region);
    Ordinal b = random_point(rng, region);
    if (a == top || b == top || a == b) continue;
    if (b < a) std::swap(a, b);
    ivs.push_back(Interval{a, b});
  }
  return ClopenSet::from_intervals(sp, std::move(ivs));
}

// Up to `count` random isolated points spread over the parts of a
// successor-rank space.
inline ClopenSet random_isolated_window(Rng& rng, const Space& sp, std::uint64_t count) {
  std::vector<Interval> ivs;
  for (std::uint64_t t = 0; t < count; ++t) {
    const Ordinal block = Ordinal::omega_pow(sp.alpha, uniform(rng, 0, sp.n - 1)) +
                          Ordinal::omega_pow(predecessor(sp.alpha), uniform(rng, 0, 3));
    const Ordinal x = block + Ordinal(uniform(rng, 1, 12));
    if (x >= sp.max_point()) continue;
    ivs.push_back(Interval{predecessor(x), x});
  }
  return ClopenSet::from_intervals(sp, std::move(ivs));
}

// A random maximal shift out of p (successor-rank spaces).
inline ShiftMove random_move(Rng& rng, const GoodPartition& p) {
  const Ordinal beta = shift_rank(p.space);
  const std::size_t n = p.parts.size();
  const std::size_t i = uniform(rng, 0, n - 1);
  std::size_t j = uniform(rng, 0, n - 2);
  if (j >= i) ++j;
  std::vector<Interval> candidates;
  for (const auto& iv : p.parts[i].intervals()) {
    if (!count_rank(iv, beta).is_zero()) candidates.push_back(iv);
  }
  const Interval& iv = candidates[uniform(rng, 0, candidates.size() - 1)];
  const Ordinal x = random_rank_point(rng, iv, beta);
  return ShiftMove{i, j, unit_around(p.parts[i], x)};
}

}  // namespace stone::testing

namespace stone::testing {

// A nonempty clopen A and a B with the same characteristic pair.
inline std::pair<ClopenSet, ClopenSet> random_equivalent_pair(Rng& rng, const Space& sp) {
  for (;;) {
    const ClopenSet a = random_clopen(rng, sp);
    const ClopenSet r = random_clopen(rng, sp);
    if (a.is_empty() || char_pair(r) < char_pair(a)) continue;
    return {a, embed_copy(r, char_pair(a))};
  }
}

}  // namespace stone::testing

namespace stone::testing {

// Starting from the basepoint, moves `moves` random units of random rank
// below max_rank (and below alpha) between random parts.
inline GoodPartition random_transfers(Rng& rng, const Space& sp, int moves, std::uint64_t max_rank) {
  GoodPartition g = basepoint(sp);
  for (int t = 0; t < moves; ++t) {
    Ordinal r(uniform(rng, 0, max_rank));
    if (!(r < sp.alpha)) r = Ordinal(0);
    const std::size_t i = uniform(rng, 0, sp.n - 1);
    std::size_t j = uniform(rng, 0, sp.n - 2);
    if (j >= i) ++j;
    std::vector<Interval> candidates;
    for (const auto& iv : g.parts[i].intervals()) {
      if (!count_rank(iv, r).is_zero()) candidates.push_back(iv);
    }
    const Ordinal x = random_rank_point(rng, candidates[uniform(rng, 0, candidates.size() - 1)], r);
    const ClopenSet unit = unit_around(g.parts[i], x);
    g.parts[i] = difference(g.parts[i], unit);
    g.parts[j] = unite(g.parts[j], unit);
  }
  return g;
}

}  // namespace stone::testing
