#include <doctest.h>

#include "stone/cargraph.hpp"
#include "stone/error.hpp"
#include "stone/partition.hpp"
#include "support.hpp"

using namespace stone;
using stone::testing::C;
using stone::testing::O;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Underflow;
}

}  // namespace

TEST_CASE("basepoint") {
  const Space s12{O("1"), 2};
  const GoodPartition p = basepoint(s12);
  CHECK(p.parts == std::vector{C(s12, "[0,w]"), C(s12, "(w,w*2]")});

  const Space s23{O("2"), 3};
  CHECK(basepoint(s23).parts == std::vector{C(s23, "[0,w^2]"), C(s23, "(w^2,w^2*2]"), C(s23, "(w^2*2,w^2*3]")});
  CHECK(code_of([] { basepoint(Space(O("0"), 3)); }) == ErrorCode::RankZeroSpace);
}

TEST_CASE("validate") {
  const Space s22{O("2"), 2};
  CHECK(validate(basepoint(s22)).ok());

  const Space s12{O("1"), 2};
  const GoodPartition both{s12, {C(s12, "[0,w*2]"), ClopenSet::empty(s12)}};
  CHECK(validate(both).kind == Violation::MaximalPointCount);

  const GoodPartition overlap{s12, {C(s12, "[0,w+3]"), C(s12, "(w+1,w*2]")}};
  const auto r = validate(overlap);
  CHECK(r.kind == Violation::Overlap);
  CHECK(r.detail == "(w+1,w+3]");

  const GoodPartition gap{s12, {C(s12, "[0,w]"), C(s12, "(w+1,w*2]")}};
  CHECK(validate(gap).kind == Violation::GapUncovered);

  const GoodPartition swapped{s12, {C(s12, "(w,w*2]"), C(s12, "[0,w]")}};
  CHECK(validate(swapped).kind == Violation::MaximalPointCount);
}

TEST_CASE("shift: the add-one prototype on the two-ended compactification of Z") {
  // Space(1,2): two ends w and w*2, isolated points in between.
  const Space s12{O("1"), 2};
  const GoodPartition p = basepoint(s12);
  const ShiftMove m{0, 1, C(s12, "(4,5]")};
  const GoodPartition q = shift(p, m);
  CHECK(q.parts == std::vector{C(s12, "[0,4],(5,w]"), C(s12, "(4,5],(w,w*2]")});
  CHECK(validate(q).ok());
  CHECK(shift(q, ShiftMove{1, 0, m.payload}) == p);
  CHECK(defect(p, q) == 1);

  CHECK(code_of([&] { shift(p, ShiftMove{0, 1, C(s12, "(4,6]")}); }) == ErrorCode::PayloadWrongCharPair);
  CHECK(code_of([&] { shift(p, ShiftMove{0, 1, C(s12, "[0,w]")}); }) == ErrorCode::PayloadContainsMaximalPoint);
  CHECK(code_of([&] { shift(p, ShiftMove{0, 1, C(s12, "(w+4,w+5]")}); }) == ErrorCode::PayloadNotInPart);

  const Space s32{O("3"), 2};
  CHECK(code_of([&] { shift(basepoint(s32), ShiftMove{0, 1, C(s32, "(w,w*2]")}); }) ==
        ErrorCode::PayloadWrongCharPair);
  const Space sw2{O("w"), 2};
  CHECK(code_of([&] { shift(basepoint(sw2), ShiftMove{0, 1, C(sw2, "(4,5]")}); }) == ErrorCode::NotSuccessorRank);
}

TEST_CASE("is_adjacent") {
  const Space s22{O("2"), 2};
  const GoodPartition p = basepoint(s22);
  const ShiftMove m{0, 1, C(s22, "(w*3+2,w*4]")};
  const GoodPartition q = shift(p, m);
  const auto w = is_adjacent(p, q);
  REQUIRE(w.has_value());
  CHECK(*w == m);
  CHECK(is_adjacent(q, p).has_value());
  CHECK_FALSE(is_adjacent(p, p).has_value());

  // two rank-1 points moved from part 1 to part 2: difference has pair (1, 2)
  const GoodPartition q2 = shift(q, ShiftMove{0, 1, C(s22, "(w*6,w*7]")});
  CHECK(char_pair(symdiff(p.parts[0], q2.parts[0])) == CharPair::of(O("1"), 2));
  CHECK_FALSE(is_adjacent(p, q2).has_value());

  // points moved in both directions between the same parts
  const GoodPartition q3 = shift(q, ShiftMove{1, 0, C(s22, "(w^2+w,w^2+w*2]")});
  CHECK_FALSE(is_adjacent(p, q3).has_value());
}

TEST_CASE("random_partition") {
  const Space s22{O("2"), 2};
  const ClopenSet window = C(s22, "(w*2+1,w*5],(w^2+3,w^2+w*2+4]");
  const GoodPartition a = random_partition(s22, window, 42);
  CHECK(a == random_partition(s22, window, 42));
  CHECK(validate(a).ok());
  CHECK(random_partition(s22, ClopenSet::empty(s22), 9) == basepoint(s22));
  CHECK(code_of([&] { random_partition(s22, C(s22, "(w*3,w^2]"), 1); }) == ErrorCode::WindowTouchesMaximalPoint);

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Space sp = t % 2 ? Space(O("2"), 3) : Space(O("w+1"), 2);
    const GoodPartition g = random_partition(sp, stone::testing::random_window(rng, sp, 4), rng());
    CHECK(validate(g).ok());
  }
}

TEST_CASE("property: shifts preserve validity, invert, and move the defect by one") {
  Rng rng(99);
  const Space spaces[] = {Space(O("1"), 2), Space(O("2"), 2), Space(O("2"), 3), Space(O("3"), 2),
                          Space(O("w+1"), 2)};
  for (int t = 0; t < 150; ++t) {
    const Space& sp = spaces[t % 5];
    const GoodPartition p = random_partition(sp, stone::testing::random_window(rng, sp, 3), rng());
    const ShiftMove m = stone::testing::random_move(rng, p);
    CAPTURE(to_string(p));
    CAPTURE(to_string(m.payload));
    const GoodPartition q = shift(p, m);
    CHECK(validate(q).ok());
    CHECK(shift(q, ShiftMove{m.to, m.from, m.payload}) == p);
    CHECK(is_adjacent(p, q).has_value());
    CHECK(is_adjacent(q, p).has_value());
    CHECK(defect(p, q) == 1);

    const Ordinal beta = shift_rank(sp);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      const CharPair d = char_pair(symdiff(p.parts[i], q.parts[i]));
      CHECK((d.empty || d == CharPair::of(beta, 1)));
    }
  }
}
