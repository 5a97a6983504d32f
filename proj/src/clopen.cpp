#include "stone/clopen.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "stone/error.hpp"

namespace stone {

namespace {

// nullopt stands for the virtual point just below 0.
bool lo_less(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

// lo <= hi, treating nullopt as -1.
bool lo_at_most(const std::optional<Ordinal>& lo, const Ordinal& hi) { return !lo || *lo <= hi; }

// Number of successor ordinals in (a, b].
Count successors_between(const Ordinal& a, const Ordinal& b) {
  if (a >= b) return Count::finite(0);
  const Ordinal gap = left_sub(a, b);
  return gap.is_finite() ? Count::finite(gap.finite_value()) : Count::infinite();
}

// The order type of the interval measured from its left end: (lo, hi] is
// {lo + t : 0 < t <= length}, and [0, hi] is {x : 1 + x in (0, length]}.
Ordinal offset_length(const Interval& iv) {
  return iv.lo ? left_sub(*iv.lo, iv.hi) : Ordinal(1) + iv.hi;
}

void require_same_ambient(const ClopenSet& a, const ClopenSet& b) {
  if (!(a.ambient() == b.ambient())) {
    throw Error(ErrorCode::AmbientMismatch, to_string(a.ambient()) + " vs " + to_string(b.ambient()));
  }
}

}  // namespace

Space::Space(Ordinal a, std::uint64_t count) : alpha(std::move(a)), n(count) {
  if (n == 0) throw std::invalid_argument("a space needs at least one maximal point");
}

// Rank zero spaces are the n points 0..n-1; otherwise [0, w^alpha * n].
Ordinal Space::max_point() const { return maximal_point(n); }

Ordinal Space::maximal_point(std::uint64_t i) const {
  if (i == 0 || i > n) throw std::out_of_range("maximal point index out of range");
  if (alpha.is_zero()) return Ordinal(i - 1);
  return Ordinal::omega_pow(alpha, i);
}

std::string to_string(const Space& s) {
  return "X(" + to_string(s.alpha) + "," + std::to_string(s.n) + ")";
}

std::strong_ordering operator<=>(const CharPair& a, const CharPair& b) {
  if (a.empty || b.empty) return b.empty <=> a.empty;
  if (auto c = a.rank <=> b.rank; c != 0) return c;
  return a.count <=> b.count;
}

std::string to_string(const CharPair& p) {
  if (p.empty) return "Empty";
  return "(" + to_string(p.rank) + "," + std::to_string(p.count) + ")";
}

// ---------------------------------------------------------------------------
// Construction and Boolean algebra

ClopenSet ClopenSet::from_intervals(const Space& ambient, std::vector<Interval> intervals) {
  const Ordinal top = ambient.max_point();
  for (const auto& iv : intervals) {
    if (iv.hi > top) {
      throw Error(ErrorCode::InvalidInterval, to_string(iv) + " leaves " + to_string(ambient));
    }
    if (iv.lo && *iv.lo >= iv.hi) throw Error(ErrorCode::InvalidInterval, to_string(iv) + " is empty");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return lo_less(x.lo, y.lo); });
  ClopenSet out(ambient);
  for (auto& iv : intervals) {
    if (!out.intervals_.empty() && lo_at_most(iv.lo, out.intervals_.back().hi)) {
      auto& last = out.intervals_.back();
      if (iv.hi > last.hi) last.hi = std::move(iv.hi);
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

ClopenSet ClopenSet::full(const Space& ambient) { return initial(ambient, ambient.max_point()); }

ClopenSet ClopenSet::interval(const Space& ambient, const Ordinal& lo, const Ordinal& hi) {
  return from_intervals(ambient, {Interval{lo, hi}});
}

ClopenSet ClopenSet::initial(const Space& ambient, const Ordinal& hi) {
  return from_intervals(ambient, {Interval{std::nullopt, hi}});
}

ClopenSet ClopenSet::singleton(const Space& ambient, const Ordinal& x) {
  if (x.is_zero()) return initial(ambient, x);
  if (!is_successor(x)) {
    throw Error(ErrorCode::InvalidInterval, "{" + to_string(x) + "} is not open: the point is not isolated");
  }
  return interval(ambient, predecessor(x), x);
}

ClopenSet complement(const ClopenSet& a) {
  std::vector<Interval> out;
  std::optional<Ordinal> prev;  // nullopt: nothing emitted yet, gap starts at 0
  bool started = false;
  for (const auto& iv : a.intervals()) {
    if (iv.lo) {
      if (!started) {
        out.push_back(Interval{std::nullopt, *iv.lo});
      } else {
        out.push_back(Interval{prev, *iv.lo});
      }
    }
    prev = iv.hi;
    started = true;
  }
  const Ordinal top = a.ambient().max_point();
  if (!started) {
    out.push_back(Interval{std::nullopt, top});
  } else if (*prev < top) {
    out.push_back(Interval{prev, top});
  }
  return ClopenSet::from_intervals(a.ambient(), std::move(out));
}

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  require_same_ambient(a, b);
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return ClopenSet::from_intervals(a.ambient(), std::move(all));
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  require_same_ambient(a, b);
  std::vector<Interval> out;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const auto& lo = lo_less(x[i].lo, y[j].lo) ? y[j].lo : x[i].lo;
    const auto& hi = std::min(x[i].hi, y[j].hi);
    if (!lo || *lo < hi) out.push_back(Interval{lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return ClopenSet::from_intervals(a.ambient(), std::move(out));
}

ClopenSet difference(const ClopenSet& a, const ClopenSet& b) {
  require_same_ambient(a, b);
  return intersect(a, complement(b));
}

ClopenSet symdiff(const ClopenSet& a, const ClopenSet& b) {
  return unite(difference(a, b), difference(b, a));
}

ClopenSet combine(SetOp op, const ClopenSet& a, const ClopenSet& b) {
  switch (op) {
    case SetOp::Union: return unite(a, b);
    case SetOp::Intersect: return intersect(a, b);
    case SetOp::SymDiff: return symdiff(a, b);
    case SetOp::Difference: return difference(a, b);
  }
  throw std::logic_error("unknown set operation");
}

bool is_subset(const ClopenSet& a, const ClopenSet& b) { return difference(a, b).is_empty(); }

bool are_disjoint(const ClopenSet& a, const ClopenSet& b) { return intersect(a, b).is_empty(); }

bool contains(const ClopenSet& a, const Ordinal& x) {
  if (x > a.ambient().max_point()) {
    throw Error(ErrorCode::PointOutsideAmbient, to_string(x) + " outside " + to_string(a.ambient()));
  }
  const auto& ivs = a.intervals();
  auto it = std::lower_bound(ivs.begin(), ivs.end(), x,
                             [](const Interval& iv, const Ordinal& p) { return iv.hi < p; });
  return it != ivs.end() && (!it->lo || *it->lo < x);
}

// ---------------------------------------------------------------------------
// Rank counting

Count count_rank(const Interval& iv, const Ordinal& beta) {
  const Ordinal q_hi = divmod_omega_pow(iv.hi, beta).quotient;
  if (!iv.lo) {
    Count c = successors_between(Ordinal(0), q_hi);
    return beta.is_zero() ? c + Count::finite(1) : c;
  }
  const Ordinal q_lo = divmod_omega_pow(*iv.lo, beta).quotient;
  return successors_between(q_lo, q_hi);
}

Count count_rank(const ClopenSet& a, const Ordinal& beta) {
  Count total = Count::finite(0);
  for (const auto& iv : a.intervals()) total = total + count_rank(iv, beta);
  return total;
}

CharPair char_pair(const Interval& iv) {
  // Translating by the left end preserves ranks, so the top rank of the
  // interval is the leading exponent of its offset length.
  const Ordinal len = offset_length(iv);
  return CharPair::of(len.leading_exponent(), len.leading_coef());
}

CharPair char_pair(const ClopenSet& a) {
  CharPair best;
  for (const auto& iv : a.intervals()) {
    CharPair p = char_pair(iv);
    if (best.empty || p.rank > best.rank) {
      best = std::move(p);
    } else if (p.rank == best.rank) {
      best.count += p.count;
    }
  }
  return best;
}

std::vector<Ordinal> rank_points(const ClopenSet& a, const Ordinal& gamma) {
  std::vector<Ordinal> out;
  for (const auto& iv : a.intervals()) {
    const Count c = count_rank(iv, gamma);
    if (c.is_infinite()) throw std::logic_error("rank_points: infinitely many points of rank " + to_string(gamma));
    if (c.is_zero()) continue;
    Ordinal y;
    if (iv.lo) {
      y = divmod_omega_pow(*iv.lo, gamma).quotient;
    } else if (gamma.is_zero()) {
      out.emplace_back(0);
    }
    const std::uint64_t successors = (!iv.lo && gamma.is_zero()) ? c.value() - 1 : c.value();
    for (std::uint64_t k = 0; k < successors; ++k) {
      y = successor(y);
      out.push_back(mul_omega_pow(gamma, y));
    }
  }
  return out;
}

ClopenSet unit_around(const ClopenSet& a, const Ordinal& x) {
  const auto& ivs = a.intervals();
  auto it = std::lower_bound(ivs.begin(), ivs.end(), x,
                             [](const Interval& iv, const Ordinal& p) { return iv.hi < p; });
  if (it == ivs.end() || (it->lo && !(*it->lo < x))) {
    throw Error(ErrorCode::PointNotInDomain, to_string(x) + " not in " + to_string(a));
  }
  if (x.is_zero()) return ClopenSet::initial(a.ambient(), x);
  const Ordinal gamma = point_rank(x);
  const Ordinal base = mul_omega_pow(gamma, predecessor(divmod_omega_pow(x, gamma).quotient));
  if (!it->lo) {
    return base.is_zero() && !gamma.is_zero() ? ClopenSet::initial(a.ambient(), x)
                                              : ClopenSet::interval(a.ambient(), base, x);
  }
  return ClopenSet::interval(a.ambient(), std::max(*it->lo, base), x);
}

ClopenSet find_copy(const ClopenSet& a, const Ordinal& gamma) {
  for (const auto& iv : a.intervals()) {
    if (count_rank(iv, gamma).is_zero()) continue;
    Ordinal x;
    if (iv.lo) {
      x = mul_omega_pow(gamma, successor(divmod_omega_pow(*iv.lo, gamma).quotient));
    } else if (!gamma.is_zero()) {
      x = Ordinal::omega_pow(gamma);
    }
    return unit_around(a, x);
  }
  throw Error(ErrorCode::NoPointOfRank, to_string(a) + " has no point of rank " + to_string(gamma));
}

std::vector<ClopenSet> split_units(const ClopenSet& a) {
  const CharPair pair = char_pair(a);
  if (pair.empty) throw Error(ErrorCode::EmptyInput, "cannot split the empty set");
  if (pair.count == 1) return {a};
  const std::vector<Ordinal> pts = rank_points(a, pair.rank);
  std::vector<ClopenSet> out;
  out.reserve(pts.size());
  const Space& sp = a.ambient();
  out.push_back(intersect(a, ClopenSet::initial(sp, pts.front())));
  for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
    out.push_back(intersect(a, ClopenSet::interval(sp, pts[k - 1], pts[k])));
  }
  out.push_back(intersect(a, ClopenSet::interval(sp, pts[pts.size() - 2], sp.max_point())));
  return out;
}

ClopenSet embed_copy(const ClopenSet& a, const CharPair& pair) {
  ClopenSet out = ClopenSet::empty(a.ambient());
  if (pair.empty) return out;
  ClopenSet rest = a;
  for (std::uint64_t k = 0; k < pair.count; ++k) {
    ClopenSet unit = find_copy(rest, pair.rank);
    rest = difference(rest, unit);
    out = unite(out, unit);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Interval& iv) {
  if (!iv.lo) return "[0," + to_string(iv.hi) + "]";
  return "(" + to_string(*iv.lo) + "," + to_string(iv.hi) + "]";
}

std::string to_string(const ClopenSet& a) {
  if (a.is_empty()) return "{}";
  std::string out;
  for (const auto& iv : a.intervals()) {
    if (!out.empty()) out += ',';
    out += to_string(iv);
  }
  return out;
}

ClopenSet parse_clopen(const Space& ambient, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::vector<Interval> ivs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_until = [&](char stop) {
    const std::size_t start = pos;
    const std::size_t end = text.find(stop, pos);
    if (end == std::string_view::npos) throw SyntaxError(text.size(), std::string("expected '") + stop + "'");
    try {
      Ordinal v = parse_ordinal(text.substr(start, end - start));
      pos = end + 1;
      return v;
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + e.offset(), "malformed ordinal in interval");
    }
  };
  skip_ws();
  if (text.substr(pos) == "{}" || pos == text.size()) return ClopenSet::empty(ambient);
  while (true) {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError(pos, "expected an interval");
    const char open = text[pos];
    if (open != '(' && open != '[') throw SyntaxError(pos, "expected '(' or '['");
    ++pos;
    const std::size_t lo_at = pos;
    Ordinal lo = parse_until(',');
    Ordinal hi = parse_until(']');
    if (open == '[') {
      if (!lo.is_zero()) throw SyntaxError(lo_at, "closed intervals must start at 0");
      ivs.push_back(Interval{std::nullopt, std::move(hi)});
    } else {
      ivs.push_back(Interval{std::move(lo), std::move(hi)});
    }
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == ',' || text[pos] == 'U') {
      ++pos;
    } else if (text.substr(pos, 3) == "\xE2\x88\xAA") {  // U+222A
      pos += 3;
    } else {
      throw SyntaxError(pos, "expected ',' between intervals");
    }
  }
  return ClopenSet::from_intervals(ambient, std::move(ivs));
}

}  // namespace stone
