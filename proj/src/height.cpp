#include "stone/height.hpp"

#include <algorithm>
#include <stdexcept>

#include "stone/error.hpp"

namespace stone {

namespace {

void require_limit(const Space& space) {
  if (!is_limit(space.alpha)) {
    throw Error(ErrorCode::NotLimitRank, "height needs a limit rank, got " + to_string(space.alpha));
  }
}

}  // namespace

const char* to_string(HeightMode m) { return m == HeightMode::ExistsIndex ? "exists" : "forall"; }

HeightReport height_report(const GoodPartition& p, const GoodPartition& q, HeightMode mode) {
  require_limit(p.space);
  if (!(p.space == q.space) || p.parts.size() != q.parts.size()) {
    throw Error(ErrorCode::AmbientMismatch, "partitions of different spaces");
  }
  HeightReport r{Ordinal(0), {}, mode};
  bool all_present = true;
  std::optional<Ordinal> lowest;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const CharPair d = char_pair(symdiff(p.parts[i], q.parts[i]));
    if (d.empty) {
      r.per_part_max_rank.push_back(std::nullopt);
      all_present = false;
      continue;
    }
    r.per_part_max_rank.push_back(d.rank);
    r.h = std::max(r.h, d.rank);
    lowest = lowest ? std::min(*lowest, d.rank) : d.rank;
  }
  if (mode == HeightMode::AllIndices) r.h = all_present && lowest ? *lowest : Ordinal(0);
  return r;
}

Ordinal rel_height(const GoodPartition& p, const GoodPartition& q, HeightMode mode) {
  return height_report(p, q, mode).h;
}

GoodPartition apply(const Homeomorphism& g, const GoodPartition& p) {
  const Space& sp = p.space;
  GoodPartition out{sp, std::vector<ClopenSet>(sp.n, ClopenSet::empty(sp))};
  std::vector<bool> filled(sp.n, false);
  for (const auto& part : p.parts) {
    const ClopenSet img = g.image(part);
    const auto tops = rank_points(img, sp.alpha);
    if (tops.size() != 1) {
      throw Error(ErrorCode::ImageNotGoodPartition, "image " + to_string(img) + " holds " +
                                                        std::to_string(tops.size()) + " maximal points");
    }
    const std::size_t k = divmod_omega_pow(tops.front(), sp.alpha).quotient.finite_value() - 1;
    filled[k] = true;
    out.parts[k] = img;
  }
  if (!std::all_of(filled.begin(), filled.end(), [](bool b) { return b; }) || !validate(out).ok()) {
    throw Error(ErrorCode::ImageNotGoodPartition, "image is not a good partition: " + to_string(out));
  }
  return out;
}

Ordinal stab_level(const Homeomorphism& g, const GoodPartition& p0, HeightMode mode) {
  return rel_height(p0, apply(g, p0), mode);
}

Homeomorphism stab_witness(const Space& space, const Ordinal& beta_prime, std::size_t i, std::size_t j) {
  require_limit(space);
  if (!(beta_prime < space.alpha)) {
    throw Error(ErrorCode::RankTooHigh, to_string(beta_prime) + " is not below " + to_string(space.alpha));
  }
  if (i == j || i >= space.n || j >= space.n) throw std::invalid_argument("stab_witness needs two distinct parts");
  const GoodPartition p = basepoint(space);
  const ClopenSet copy = find_copy(p.parts[i], beta_prime);
  std::vector<ClopenSet> target = p.parts;
  target[i] = difference(target[i], copy);
  target[j] = unite(target[j], copy);
  return partition_map(p.parts, target);
}

}  // namespace stone
