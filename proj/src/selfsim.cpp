#include "stone/selfsim.hpp"

#include <stdexcept>

#include "stone/error.hpp"

namespace stone {

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorCode::ConfigMismatch, what); }

// Copies of pieces 1..k carved from `room`, or nullopt when it is too small.
std::optional<SelfSimVertex> carve(const SelfSimConfig& config, const ClopenSet& room) {
  SelfSimVertex v{{ClopenSet::empty(config.space)}};
  ClopenSet rest = room;
  ClopenSet used = ClopenSet::empty(config.space);
  for (std::size_t i = 1; i < config.pieces.size(); ++i) {
    if (char_pair(rest) < config.pieces[i]) return std::nullopt;
    ClopenSet copy = embed_copy(rest, config.pieces[i]);
    rest = difference(rest, copy);
    used = unite(used, copy);
    v.pieces.push_back(std::move(copy));
  }
  v.pieces[0] = complement(used);
  if (char_pair(v.pieces[0]) != config.pieces[0]) return std::nullopt;
  return v;
}

}  // namespace

void validate(const SelfSimConfig& config) {
  if (config.space.n != 1) mismatch("self-similar spaces have a single maximal point");
  if (config.pieces.size() < 2) mismatch("the template needs at least two pieces");
  if (config.pieces[0] != CharPair::of(config.space.alpha, 1)) {
    mismatch("piece 0 must have pair " + to_string(CharPair::of(config.space.alpha, 1)));
  }
  for (std::size_t i = 1; i < config.pieces.size(); ++i) {
    const CharPair& p = config.pieces[i];
    if (p.empty || !(p.rank < config.space.alpha)) {
      mismatch("piece " + std::to_string(i) + " has pair " + to_string(p) + ", need rank below " +
               to_string(config.space.alpha));
    }
  }
}

SelfSimConfig config_from(const std::vector<ClopenSet>& reference) {
  if (reference.empty()) mismatch("empty reference partition");
  SelfSimConfig config{reference.front().ambient(), {}};
  for (const auto& p : reference) config.pieces.push_back(char_pair(p));
  validate(config);
  validate(config, SelfSimVertex{reference});
  return config;
}

void validate(const SelfSimConfig& config, const SelfSimVertex& v) {
  if (v.pieces.size() != config.pieces.size()) mismatch("wrong number of pieces");
  ClopenSet seen = ClopenSet::empty(config.space);
  for (std::size_t i = 0; i < v.pieces.size(); ++i) {
    const ClopenSet& p = v.pieces[i];
    if (!(p.ambient() == config.space)) mismatch("piece " + std::to_string(i) + " lives in another space");
    if (char_pair(p) != config.pieces[i]) {
      mismatch("piece " + std::to_string(i) + " has pair " + to_string(char_pair(p)) + ", template says " +
               to_string(config.pieces[i]));
    }
    if (!are_disjoint(seen, p)) mismatch("pieces overlap at " + to_string(intersect(seen, p)));
    seen = unite(seen, p);
  }
  if (seen != ClopenSet::full(config.space)) mismatch("pieces miss " + to_string(complement(seen)));
}

bool ss_adjacent(const SelfSimVertex& q, const SelfSimVertex& q2) {
  if (q.pieces.size() != q2.pieces.size() || q.pieces.empty()) mismatch("vertices have different piece counts");
  if (!(q.pieces[0].ambient() == q2.pieces[0].ambient())) mismatch("vertices live in different spaces");
  for (std::size_t i = 1; i < q.pieces.size(); ++i) {
    if (!is_subset(q.pieces[i], q2.pieces[0])) return false;
  }
  return true;
}

const char* to_string(PathBranch b) {
  switch (b) {
    case PathBranch::Trivial: return "trivial";
    case PathBranch::Direct: return "direct";
    case PathBranch::CommonNeighbor: return "common-neighbor";
    case PathBranch::Detour: return "detour";
  }
  return "?";
}

SelfSimPath short_path(const SelfSimConfig& config, const SelfSimVertex& q, const SelfSimVertex& q2) {
  validate(config, q);
  validate(config, q2);
  if (q == q2) return SelfSimPath{{q}, PathBranch::Trivial};
  if (ss_adjacent(q, q2)) return SelfSimPath{{q, q2}, PathBranch::Direct};
  if (auto mid = carve(config, intersect(q.pieces[0], q2.pieces[0]))) {
    return SelfSimPath{{q, *mid, q2}, PathBranch::CommonNeighbor};
  }
  if (auto p = detour_path(config, q, q2)) return *p;
  throw std::logic_error("short_path: neither branch applies");
}

std::optional<SelfSimPath> detour_path(const SelfSimConfig& config, const SelfSimVertex& q, const SelfSimVertex& q2) {
  auto m1 = carve(config, difference(q.pieces[0], q2.pieces[0]));
  auto m2 = carve(config, difference(q2.pieces[0], q.pieces[0]));
  if (!m1 || !m2) return std::nullopt;
  return SelfSimPath{{q, *m1, *m2, q2}, PathBranch::Detour};
}

Homeomorphism edge_involution(const SelfSimVertex& q, const SelfSimVertex& q2) {
  if (!ss_adjacent(q, q2)) throw Error(ErrorCode::NotAdjacent, "the vertices are not adjacent");
  std::vector<Homeomorphism> pieces{Homeomorphism::identity(intersect(q.pieces[0], q2.pieces[0]))};
  for (std::size_t i = 1; i < q.pieces.size(); ++i) {
    const Homeomorphism h = build_homeo(q.pieces[i], q2.pieces[i]);
    pieces.push_back(h);
    pieces.push_back(h.inverse());
  }
  return glue(pieces);
}

SelfSimVertex random_vertex(Rng& rng, const SelfSimConfig& config) {
  validate(config);
  SelfSimVertex v{{ClopenSet::empty(config.space)}};
  ClopenSet rest = ClopenSet::full(config.space);
  ClopenSet used = ClopenSet::empty(config.space);
  for (std::size_t i = 1; i < config.pieces.size(); ++i) {
    ClopenSet region = rest;
    for (int attempt = 0; attempt < 4; ++attempt) {
      const ClopenSet r = intersect(rest, random_clopen(rng, config.space));
      if (!(char_pair(r) < config.pieces[i])) {
        region = r;
        break;
      }
    }
    ClopenSet copy = embed_copy(region, config.pieces[i]);
    rest = difference(rest, copy);
    used = unite(used, copy);
    v.pieces.push_back(std::move(copy));
  }
  v.pieces[0] = complement(used);
  return v;
}

}  // namespace stone
