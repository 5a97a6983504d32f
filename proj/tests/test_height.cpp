#include <doctest.h>

#include "stone/error.hpp"
#include "stone/height.hpp"
#include "support.hpp"

using namespace stone;
using stone::testing::C;
using stone::testing::O;

namespace {

GoodPartition transfer(const GoodPartition& p, std::size_t i, std::size_t j, const Ordinal& rank) {
  GoodPartition q = p;
  const ClopenSet copy = find_copy(q.parts[i], rank);
  q.parts[i] = difference(q.parts[i], copy);
  q.parts[j] = unite(q.parts[j], copy);
  return q;
}

}  // namespace

TEST_CASE("rel_height examples") {
  const Space sw2{O("w"), 2};
  const GoodPartition p = basepoint(sw2);
  CHECK(rel_height(p, p, HeightMode::ExistsIndex) == O("0"));
  CHECK(rel_height(p, p, HeightMode::AllIndices) == O("0"));

  const GoodPartition q = transfer(p, 0, 1, O("5"));
  CHECK(rel_height(p, q, HeightMode::ExistsIndex) == O("5"));
  CHECK(rel_height(p, q, HeightMode::AllIndices) == O("5"));

  const HeightReport r = height_report(p, q);
  REQUIRE(r.per_part_max_rank.size() == 2);
  CHECK(r.per_part_max_rank[0] == O("5"));
  CHECK(r.mode == HeightMode::ExistsIndex);

  CHECK_THROWS_AS(rel_height(basepoint(Space(O("3"), 2)), basepoint(Space(O("3"), 2))), Error);
}

TEST_CASE("the all-indices reading breaks the strong triangle inequality") {
  const Space sw3{O("w"), 3};
  const GoodPartition p = basepoint(sw3);
  const GoodPartition r = transfer(p, 0, 2, O("5"));
  const GoodPartition q = transfer(r, 1, 2, O("5"));

  CHECK(rel_height(p, r, HeightMode::ExistsIndex) == O("5"));
  CHECK(rel_height(p, r, HeightMode::AllIndices) == O("0"));
  CHECK(rel_height(r, q, HeightMode::AllIndices) == O("0"));
  CHECK(rel_height(p, q, HeightMode::AllIndices) == O("5"));

  CHECK(rel_height(p, q, HeightMode::ExistsIndex) <=
        std::max(rel_height(p, r, HeightMode::ExistsIndex), rel_height(r, q, HeightMode::ExistsIndex)));
}

TEST_CASE("stab_level and stab_witness") {
  const Space sw2{O("w"), 2};
  const GoodPartition p0 = basepoint(sw2);
  CHECK(stab_level(Homeomorphism::identity(ClopenSet::full(sw2)), p0) == O("0"));
  CHECK(stab_level(stab_witness(sw2, O("3"), 0, 1), p0) == O("3"));

  const Homeomorphism g0 = stab_witness(sw2, O("0"), 0, 1);
  CHECK(stab_level(g0, p0) == O("0"));
  CHECK(apply(g0, p0) != p0);

  // a map fixing every part setwise
  const std::vector<ClopenSet> inside{C(sw2, "[0,w^3]"), C(sw2, "(w^3,w^w]"), p0.parts[1]};
  const std::vector<ClopenSet> moved{C(sw2, "[0,w^3+w^2]"), C(sw2, "(w^3+w^2,w^w]"), p0.parts[1]};
  CHECK(stab_level(partition_map(inside, moved), p0) == O("0"));

  const Space sw3{O("w"), 3};
  Ordinal prev(0);
  bool first = true;
  for (const char* b : {"1", "2", "3", "5", "10"}) {
    const Ordinal level = stab_level(stab_witness(sw3, O(b), 2, 0), basepoint(sw3));
    CHECK(level == O(b));
    if (!first) CHECK(prev < level);
    prev = level;
    first = false;
  }

  try {
    stab_witness(sw2, O("w"), 0, 1);
    FAIL("expected RankTooHigh");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooHigh);
  }
}

TEST_CASE("property: boundedness, strong triangle inequality, equivariance") {
  Rng rng(808);
  for (int t = 0; t < 200; ++t) {
    const Space sp{O("w"), t % 2 ? 3u : 2u};
    const GoodPartition p = stone::testing::random_transfers(rng, sp, 3, 9);
    const GoodPartition q = stone::testing::random_transfers(rng, sp, 3, 9);
    const GoodPartition r = stone::testing::random_transfers(rng, sp, 3, 9);
    CAPTURE(to_string(p));
    CAPTURE(to_string(q));
    CAPTURE(to_string(r));
    const Ordinal pq = rel_height(p, q);
    CHECK(pq < sp.alpha);
    CHECK(pq == rel_height(q, p));
    CHECK(pq <= std::max(rel_height(p, r), rel_height(r, q)));

    if (t % 10 == 0) {
      const GoodPartition target = stone::testing::random_transfers(rng, sp, 4, 9);
      const Homeomorphism g = partition_map(basepoint(sp).parts, target.parts);
      CHECK(apply(g, basepoint(sp)) == target);
      for (auto mode : {HeightMode::ExistsIndex, HeightMode::AllIndices}) {
        CHECK(rel_height(apply(g, p), apply(g, q), mode) == rel_height(p, q, mode));
      }
      CHECK(stab_level(g, basepoint(sp)) < sp.alpha);
    }
  }
}
