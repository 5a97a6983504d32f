#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stone/ordinal.hpp"

namespace stone {

/// The countable Stone space X_{alpha,n}, realized as the ordinal interval
/// [0, w^alpha * n] with the order topology. Its maximal points are
/// w^alpha * i for i = 1..n.
struct Space {
  Ordinal alpha;
  std::uint64_t n = 1;

  Space() = default;
  Space(Ordinal a, std::uint64_t count);

  Ordinal max_point() const;
  /// x_i = w^alpha * i, 1-based (i - 1 when alpha = 0).
  Ordinal maximal_point(std::uint64_t i) const;

  friend bool operator==(const Space&, const Space&) = default;
};

std::string to_string(const Space& s);

/// The half-open interval (lo, hi]; lo == nullopt denotes the closed [0, hi].
struct Interval {
  std::optional<Ordinal> lo;
  Ordinal hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Characteristic pair (rank, count) of a clopen set, with a distinguished
/// Empty value. Ordered lexicographically with Empty below everything, so
/// a <= b exactly when a clopen set with pair a embeds as a clopen subset of
/// one with pair b.
struct CharPair {
  bool empty = true;
  Ordinal rank;
  std::uint64_t count = 0;

  static CharPair none() { return {}; }
  static CharPair of(Ordinal r, std::uint64_t c) { return CharPair{false, std::move(r), c}; }

  friend bool operator==(const CharPair&, const CharPair&) = default;
  friend std::strong_ordering operator<=>(const CharPair& a, const CharPair& b);
};

std::string to_string(const CharPair& p);

/// A clopen subset of a Space, kept as a normalized list of intervals:
/// sorted, pairwise disjoint and non-adjacent. Normal forms are unique, so
/// set equality is structural equality.
class ClopenSet {
 public:
  explicit ClopenSet(Space ambient) : ambient_(std::move(ambient)) {}

  /// Union of arbitrary (possibly overlapping) intervals. Throws
  /// InvalidInterval for lo >= hi or hi beyond the ambient maximum.
  static ClopenSet from_intervals(const Space& ambient, std::vector<Interval> intervals);
  static ClopenSet empty(const Space& ambient) { return ClopenSet(ambient); }
  static ClopenSet full(const Space& ambient);
  /// (lo, hi]
  static ClopenSet interval(const Space& ambient, const Ordinal& lo, const Ordinal& hi);
  /// [0, hi]
  static ClopenSet initial(const Space& ambient, const Ordinal& hi);
  static ClopenSet singleton(const Space& ambient, const Ordinal& x);

  const Space& ambient() const noexcept { return ambient_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool is_empty() const noexcept { return intervals_.empty(); }

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  Space ambient_;
  std::vector<Interval> intervals_;
};

enum class SetOp { Union, Intersect, SymDiff, Difference };

/// Throws AmbientMismatch when the operands live in different spaces.
ClopenSet combine(SetOp op, const ClopenSet& a, const ClopenSet& b);
ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet symdiff(const ClopenSet& a, const ClopenSet& b);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);

bool is_subset(const ClopenSet& a, const ClopenSet& b);
bool are_disjoint(const ClopenSet& a, const ClopenSet& b);

/// Throws PointOutsideAmbient for x beyond the ambient maximum.
bool contains(const ClopenSet& a, const Ordinal& x);

/// Number of points of Cantor-Bendixson rank beta in the set. Rank-beta
/// points are w^beta * y with y a successor (plus the point 0 when beta = 0).
Count count_rank(const ClopenSet& a, const Ordinal& beta);
Count count_rank(const Interval& iv, const Ordinal& beta);

CharPair char_pair(const ClopenSet& a);
CharPair char_pair(const Interval& iv);

/// The points of rank gamma in increasing order. Requires a finite count.
std::vector<Ordinal> rank_points(const ClopenSet& a, const Ordinal& gamma);

/// The canonical clopen neighbourhood of x inside a with characteristic
/// pair (rank(x), 1): (max(lo, w^g * (y-1)), x] where x = w^g * y and
/// (lo, hi] is the interval of a holding x.
ClopenSet unit_around(const ClopenSet& a, const Ordinal& x);

/// unit_around the leftmost point of rank gamma. Throws NoPointOfRank.
ClopenSet find_copy(const ClopenSet& a, const Ordinal& gamma);

/// Splits a set with pair (g, m) into m clopen pieces of pair (g, 1),
/// cutting just after each of the first m-1 rank-g points. Throws EmptyInput.
std::vector<ClopenSet> split_units(const ClopenSet& a);

/// Takes pair.count disjoint units of rank pair.rank from a, left to right.
/// The result has exactly the requested pair. Requires pair <= char_pair(a);
/// throws NoPointOfRank otherwise.
ClopenSet embed_copy(const ClopenSet& a, const CharPair& pair);

/// Text form: comma-separated "(a,b]" / "[0,b]" intervals; "{}" is empty.
std::string to_string(const ClopenSet& a);
std::string to_string(const Interval& iv);
ClopenSet parse_clopen(const Space& ambient, std::string_view text);

}  // namespace stone
