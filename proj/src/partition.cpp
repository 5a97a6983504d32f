#include "stone/partition.hpp"

#include <random>

#include "stone/error.hpp"

namespace stone {

std::string to_string(Violation v) {
  switch (v) {
    case Violation::None: return "ok";
    case Violation::WrongPartCount: return "WrongPartCount";
    case Violation::AmbientMismatch: return "AmbientMismatch";
    case Violation::Overlap: return "Overlap";
    case Violation::GapUncovered: return "GapUncovered";
    case Violation::MaximalPointCount: return "MaximalPointCount";
    case Violation::CharPairMismatch: return "CharPairMismatch";
  }
  return "unknown";
}

GoodPartition basepoint(const Space& space) {
  if (space.alpha.is_zero()) {
    throw Error(ErrorCode::RankZeroSpace, to_string(space) + " is finite and discrete");
  }
  GoodPartition p{space, {}};
  p.parts.push_back(ClopenSet::initial(space, space.maximal_point(1)));
  for (std::uint64_t i = 2; i <= space.n; ++i) {
    p.parts.push_back(ClopenSet::interval(space, space.maximal_point(i - 1), space.maximal_point(i)));
  }
  return p;
}

ValidationReport validate(const GoodPartition& p) {
  const Space& sp = p.space;
  if (p.parts.size() != sp.n) {
    return {Violation::WrongPartCount, 0, 0,
            std::to_string(p.parts.size()) + " parts for " + std::to_string(sp.n) + " maximal points"};
  }
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (!(p.parts[i].ambient() == sp)) return {Violation::AmbientMismatch, i, 0, to_string(p.parts[i].ambient())};
  }
  ClopenSet cover = ClopenSet::empty(sp);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
      const ClopenSet common = intersect(p.parts[i], p.parts[j]);
      if (!common.is_empty()) return {Violation::Overlap, i, j, to_string(common)};
    }
    cover = unite(cover, p.parts[i]);
  }
  if (const ClopenSet gap = complement(cover); !gap.is_empty()) {
    return {Violation::GapUncovered, 0, 0, to_string(gap)};
  }
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    std::uint64_t held = 0;
    bool own = false;
    for (std::uint64_t k = 1; k <= sp.n; ++k) {
      if (contains(p.parts[i], sp.maximal_point(k))) {
        ++held;
        own = own || k == i + 1;
      }
    }
    if (held != 1 || !own) {
      return {Violation::MaximalPointCount, i, 0,
              "part " + std::to_string(i + 1) + " holds " + std::to_string(held) + " maximal points"};
    }
    if (const CharPair cp = char_pair(p.parts[i]); !(cp == CharPair::of(sp.alpha, 1))) {
      return {Violation::CharPairMismatch, i, 0, to_string(cp)};
    }
  }
  return {};
}

Ordinal shift_rank(const Space& space) {
  if (!is_successor(space.alpha)) {
    throw Error(ErrorCode::NotSuccessorRank, "rank " + to_string(space.alpha) + " is not a successor");
  }
  return predecessor(space.alpha);
}

GoodPartition shift(const GoodPartition& p, const ShiftMove& m) {
  const Ordinal beta = shift_rank(p.space);
  if (m.from >= p.parts.size() || m.to >= p.parts.size() || m.from == m.to) {
    throw std::out_of_range("shift: bad part indices");
  }
  if (!is_subset(m.payload, p.parts[m.from])) {
    throw Error(ErrorCode::PayloadNotInPart, to_string(m.payload) + " not inside part " + std::to_string(m.from + 1));
  }
  if (contains(m.payload, p.space.maximal_point(m.from + 1))) {
    throw Error(ErrorCode::PayloadContainsMaximalPoint, to_string(m.payload));
  }
  if (const CharPair cp = char_pair(m.payload); !(cp == CharPair::of(beta, 1))) {
    throw Error(ErrorCode::PayloadWrongCharPair, to_string(m.payload) + " has pair " + to_string(cp));
  }
  GoodPartition q = p;
  q.parts[m.from] = difference(p.parts[m.from], m.payload);
  q.parts[m.to] = unite(p.parts[m.to], m.payload);
  return q;
}

std::optional<ShiftMove> is_adjacent(const GoodPartition& p, const GoodPartition& q) {
  const Ordinal beta = shift_rank(p.space);
  if (!(p.space == q.space)) throw Error(ErrorCode::AmbientMismatch, "partitions of different spaces");
  std::vector<std::size_t> changed;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (!(p.parts[i] == q.parts[i])) changed.push_back(i);
  }
  if (changed.size() != 2) return std::nullopt;
  for (auto [i, j] : {std::pair{changed[0], changed[1]}, std::pair{changed[1], changed[0]}}) {
    // everything moves from i to j
    if (!is_subset(q.parts[i], p.parts[i])) continue;
    ClopenSet moved = difference(p.parts[i], q.parts[i]);
    if (!(difference(q.parts[j], p.parts[j]) == moved) || !is_subset(p.parts[j], q.parts[j])) continue;
    if (!(char_pair(moved) == CharPair::of(beta, 1))) return std::nullopt;
    return ShiftMove{i, j, std::move(moved)};
  }
  return std::nullopt;
}

GoodPartition random_partition(const Space& space, const ClopenSet& window, std::uint64_t seed) {
  for (std::uint64_t k = 1; k <= space.n; ++k) {
    if (contains(window, space.maximal_point(k))) {
      throw Error(ErrorCode::WindowTouchesMaximalPoint, to_string(space.maximal_point(k)));
    }
  }
  GoodPartition p = basepoint(space);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, p.parts.size() - 1);
  for (const auto& iv : window.intervals()) {
    for (const auto& chunk : split_units(ClopenSet::from_intervals(space, {iv}))) {
      const std::size_t target = pick(rng);
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        p.parts[i] = i == target ? unite(p.parts[i], chunk) : difference(p.parts[i], chunk);
      }
    }
  }
  return p;
}

std::size_t owner(const GoodPartition& p, const Ordinal& x) {
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (contains(p.parts[i], x)) return i;
  }
  throw Error(ErrorCode::InvalidPartition, to_string(x) + " is not covered");
}

std::string to_string(const GoodPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i > 0) out += " ; ";
    out += to_string(p.parts[i]);
  }
  return out;
}

GoodPartition parse_partition(const Space& space, std::string_view text) {
  if (text == "basepoint") return basepoint(space);
  GoodPartition p{space, {}};
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    try {
      p.parts.push_back(parse_clopen(space, piece));
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + e.offset(), "malformed part");
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return p;
}

}  // namespace stone
