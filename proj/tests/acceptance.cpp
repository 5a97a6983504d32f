// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every criterion is exact; the time limits are hard.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "stone/cargraph.hpp"
#include "stone/height.hpp"
#include "stone/homeo.hpp"
#include "stone/selfsim.hpp"
#include "support.hpp"

using namespace stone;
using stone::testing::C;
using stone::testing::O;

namespace {

// Collects the first failure; later checks are skipped cheaply.
struct Check {
  std::string failure;
  std::string detail;
  bool ok() const { return failure.empty(); }
  void expect(bool cond, const std::string& what) {
    if (ok() && !cond) failure = what;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Check&)> body;
};

// alpha, and whether it is 0 / a successor / a limit, written out by hand.
enum class Kind { Zero, Successor, Limit };
const std::pair<const char*, Kind> kGrid[] = {
    {"0", Kind::Zero},     {"1", Kind::Successor},   {"2", Kind::Successor},
    {"3", Kind::Successor}, {"w", Kind::Limit},       {"w+1", Kind::Successor},
    {"w*2", Kind::Limit},   {"w^2", Kind::Limit},     {"w^w+1", Kind::Successor},
};

void classification(Check& c) {
  for (const auto& [a, kind] : kGrid) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      GroupClass want{};
      if (n == 1 || kind == Kind::Zero) {
        want = {true, true, true};
      } else if (kind == Kind::Successor) {
        want = {false, true, true};
      } else {
        want = {false, false, true};
      }
      c.expect(classify_group(O(a), n) == want, std::string("classify_group(") + a + ", " + std::to_string(n) + ")");
    }
  }
}

void char_pairs(Check& c) {
  for (const auto& [a, kind] : kGrid) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const Space sp{O(a), n};
      c.expect(char_pair(ClopenSet::full(sp)) == CharPair::of(O(a), n),
               std::string("char_pair of Space(") + a + ", " + std::to_string(n) + ")");
    }
  }
}

void check_path(Check& c, const Path& path, const GoodPartition& q, const std::string& tag) {
  const auto verts = path.vertices();
  for (std::size_t k = 0; k < verts.size(); ++k) {
    c.expect(validate(verts[k]).ok(), tag + ": invalid vertex " + std::to_string(k));
    if (k > 0) c.expect(is_adjacent(verts[k - 1], verts[k]).has_value(), tag + ": non-adjacent step");
  }
  c.expect(verts.back() == q, tag + ": path does not end at Q");
}

void rank_one_exactness(Check& c) {
  Rng rng(1);
  const Space sp{O("1"), 2};
  for (int t = 0; t < 200 && c.ok(); ++t) {
    const ClopenSet w = stone::testing::random_isolated_window(rng, sp, uniform(rng, 0, 10));
    const GoodPartition p = random_partition(sp, w, rng());
    const GoodPartition q = random_partition(sp, w, rng());
    const std::string tag = "pair " + std::to_string(t);
    const std::uint64_t d = defect(p, q);
    c.expect(bfs_distance(p, q, w) == d, tag + ": bfs != defect");
    const Path path = connect_path(p, q);
    c.expect(d <= path.length() && path.length() <= d + 4, tag + ": path length out of [d, d+4]");
    check_path(c, path, q, tag);
  }
}

void sandwich(Check& c) {
  Rng rng(2);
  const Space spaces[] = {Space(O("2"), 2), Space(O("2"), 3), Space(O("3"), 2), Space(O("w+1"), 2)};
  for (const auto& sp : spaces) {
    for (int t = 0; t < 100 && c.ok(); ++t) {
      const ClopenSet w = stone::testing::random_window(rng, sp, 4);
      const GoodPartition p = random_partition(sp, w, rng());
      const GoodPartition q = random_partition(sp, w, rng());
      const std::string tag = to_string(sp) + " pair " + std::to_string(t);
      const std::uint64_t d = defect(p, q);
      const Path path = connect_path(p, q);
      c.expect(path.end() == q, tag + ": path does not end at Q");
      c.expect(d <= path.length() && path.length() <= d + 2 * sp.n * (sp.n - 1), tag + ": length out of bounds");
    }
  }
}

void infinite_diameter(Check& c) {
  const Space sp{O("2"), 2};
  const GoodPartition p = basepoint(sp);
  for (std::uint64_t k = 1; k <= 20; ++k) {
    GoodPartition q = p;
    for (std::uint64_t u = 0; u < k; ++u) {
      const Ordinal lo = Ordinal::omega_pow(O("1"), 3 * u + 1);
      q = shift(q, ShiftMove{0, 1, ClopenSet::interval(sp, lo, lo + Ordinal::omega())});
    }
    c.expect(validate(q).ok(), "witness " + std::to_string(k) + " invalid");
    c.expect(defect(p, q) == k, "witness " + std::to_string(k) + " has the wrong defect");
  }
}

void self_similar(Check& c) {
  Rng rng(6);
  int middle = 0, common = 0, detour = 0;
  const std::pair<const char*, std::vector<CharPair>> configs[] = {
      {"1", {CharPair::of(O("1"), 1), CharPair::of(O("0"), 2), CharPair::of(O("0"), 1)}},
      {"2", {CharPair::of(O("2"), 1), CharPair::of(O("1"), 2), CharPair::of(O("0"), 3)}},
      {"w", {CharPair::of(O("w"), 1), CharPair::of(O("3"), 1), CharPair::of(O("1"), 2)}},
  };
  for (const auto& [a, pieces] : configs) {
    const SelfSimConfig cfg{Space(O(a), 1), pieces};
    for (int t = 0; t < 100 && c.ok(); ++t) {
      const std::string tag = std::string("X_{") + a + ",1} pair " + std::to_string(t);
      const SelfSimVertex q = random_vertex(rng, cfg);
      const SelfSimVertex q2 = random_vertex(rng, cfg);
      const SelfSimPath path = short_path(cfg, q, q2);
      c.expect(path.length() <= 3, tag + ": path longer than 3");
      c.expect(path.vertices.front() == q && path.vertices.back() == q2, tag + ": wrong endpoints");
      if (path.length() >= 2) {
        ++middle;
        if (path.branch == PathBranch::CommonNeighbor) ++common;
        if (path.branch == PathBranch::Detour) ++detour;
      }
      for (std::size_t k = 1; k < path.vertices.size(); ++k) {
        validate(cfg, path.vertices[k]);
        c.expect(ss_adjacent(path.vertices[k - 1], path.vertices[k]), tag + ": non-adjacent step");
        const Homeomorphism f = edge_involution(path.vertices[k - 1], path.vertices[k]);
        for (int s = 0; s < 50; ++s) {
          const Ordinal x = random_point(rng, f.domain());
          const Ordinal y = f.eval(x);
          c.expect(f.eval(y) == x, tag + ": involution fails at " + to_string(x));
          c.expect(point_rank(y) == point_rank(x), tag + ": rank changes at " + to_string(x));
        }
      }
    }
  }
  c.detail = "common-neighbor " + std::to_string(common) + "/" + std::to_string(middle) + ", detour " +
             std::to_string(detour);
  c.expect(middle > 0 && common == middle,
           "common-neighbor branch in " + std::to_string(common) + " of " + std::to_string(middle) + " runs");
}

void homeomorphisms(Check& c) {
  Rng rng(7);
  const Space sp{O("3"), 2};
  for (int t = 0; t < 100 && c.ok(); ++t) {
    auto [a, b] = stone::testing::random_equivalent_pair(rng, sp);
    const std::string tag = to_string(a) + " -> " + to_string(b);
    const Homeomorphism f = build_homeo(a, b, BuildOptions{t % 2 == 0});
    std::set<Ordinal> xs, ys;
    for (int s = 0; s < 50; ++s) {
      const Ordinal x = random_point(rng, a);
      const Ordinal y = f.eval(x);
      c.expect(contains(b, y), tag + ": image outside codomain");
      c.expect(point_rank(y) == point_rank(x), tag + ": rank changes at " + to_string(x));
      c.expect(f.eval_inverse(y) == x, tag + ": round trip fails at " + to_string(x));
      if (xs.insert(x).second) c.expect(ys.insert(y).second, tag + ": not injective at " + to_string(x));
    }
  }
  for (int t = 0; t < 100 && c.ok(); ++t) {
    const ClopenSet a = random_clopen(rng, sp);
    const ClopenSet b = t % 3 ? random_clopen(rng, sp) : embed_copy(ClopenSet::full(sp), char_pair(a));
    const ClopenSet d = t % 2 ? random_clopen(rng, sp) : embed_copy(ClopenSet::full(sp), char_pair(b));
    c.expect(are_homeomorphic(a, a), "not reflexive");
    c.expect(are_homeomorphic(a, b) == are_homeomorphic(b, a), "not symmetric");
    c.expect(!(are_homeomorphic(a, b) && are_homeomorphic(b, d)) || are_homeomorphic(a, d), "not transitive");
  }
}

GoodPartition transfer(const GoodPartition& p, std::size_t i, std::size_t j, const Ordinal& rank) {
  GoodPartition q = p;
  const ClopenSet copy = find_copy(q.parts[i], rank);
  q.parts[i] = difference(q.parts[i], copy);
  q.parts[j] = unite(q.parts[j], copy);
  return q;
}

void height_function(Check& c) {
  Rng rng(8);
  for (std::uint64_t n : {2u, 3u}) {
    const Space sp{O("w"), n};
    std::vector<Homeomorphism> conj;
    for (int k = 0; k < 20; ++k) {
      conj.push_back(partition_map(basepoint(sp).parts, stone::testing::random_transfers(rng, sp, 4, 9).parts));
    }
    for (int t = 0; t < 200 && c.ok(); ++t) {
      const GoodPartition p = stone::testing::random_transfers(rng, sp, 3, 9);
      const GoodPartition q = stone::testing::random_transfers(rng, sp, 3, 9);
      const GoodPartition r = stone::testing::random_transfers(rng, sp, 3, 9);
      const std::string tag = to_string(sp) + " triple " + std::to_string(t);
      const Ordinal pq = rel_height(p, q);
      c.expect(pq < sp.alpha, tag + ": height not below alpha");
      c.expect(pq <= std::max(rel_height(p, r), rel_height(r, q)), tag + ": strong triangle inequality fails");
      const Homeomorphism& g = conj[static_cast<std::size_t>(t) % conj.size()];
      c.expect(rel_height(apply(g, p), apply(g, q)) == pq, tag + ": not equivariant");
    }
  }

  const Space sw3{O("w"), 3};
  const GoodPartition p = basepoint(sw3);
  const GoodPartition r = transfer(p, 0, 2, O("5"));
  const GoodPartition q = transfer(r, 1, 2, O("5"));
  const HeightMode all = HeightMode::AllIndices;
  c.expect(rel_height(p, q, all) == O("5") && rel_height(p, r, all) == O("0") && rel_height(r, q, all) == O("0"),
           "pinned all-indices triple does not report 5 > max(0, 0)");

  Ordinal prev(0);
  bool first = true;
  for (const char* b : {"1", "2", "3", "5", "10"}) {
    const Ordinal level = stab_level(stab_witness(sw3, O(b), 0, 1), p);
    c.expect(level == O(b), std::string("witness level for ") + b);
    c.expect(first || prev < level, std::string("witness levels not increasing at ") + b);
    prev = level;
    first = false;
  }
}

void ordinals(Check& c) {
  Rng rng(9);
  for (int t = 0; t < 1000 && c.ok(); ++t) {
    const Ordinal a = random_ordinal(rng);
    const Ordinal b = random_ordinal(rng);
    const Ordinal d = random_ordinal(rng);
    const std::string tag = to_string(a) + ", " + to_string(b) + ", " + to_string(d);
    c.expect((a + b) + d == a + (b + d), tag + ": addition not associative");
    c.expect(a + Ordinal(0) == a && Ordinal(0) + a == a, tag + ": zero is not neutral");
    const Ordinal lo = std::min(a, b), hi = std::max(a, b);
    c.expect(lo + left_sub(lo, hi) == hi, tag + ": subtraction round trip");
    const Ordinal beta = d.is_zero() ? Ordinal(0) : d.leading_exponent();
    const DivMod dm = divmod_omega_pow(a, beta);
    c.expect(stone::testing::omega_pow_times(beta, dm.quotient) + dm.remainder == a, tag + ": divmod recomposition");
    c.expect(dm.remainder < Ordinal::omega_pow(beta), tag + ": divmod remainder too large");
    c.expect(parse_ordinal(to_string(a)) == a, tag + ": parse(print(x)) != x");
    if (is_limit(a)) {
      for (std::uint64_t k = 1; k <= 4; ++k) {
        c.expect(fundamental_seq(a, k) < fundamental_seq(a, k + 1) && fundamental_seq(a, k + 1) < a,
                 tag + ": fundamental sequence not increasing below its limit");
      }
    }
  }
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "classification table", 1, classification},
      {2, "characteristic pairs of the spaces", 1, char_pairs},
      {3, "rank-one distance is exactly the defect", 10, rank_one_exactness},
      {4, "path bound sandwich", 60, sandwich},
      {5, "unbounded defect witnesses", 5, infinite_diameter},
      {6, "self-similar graphs have diameter at most three", 30, self_similar},
      {7, "homeomorphism synthesis", 60, homeomorphisms},
      {8, "height function", 30, height_function},
      {9, "ordinal arithmetic", 5, ordinals},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < cr.limit_s, "over the time limit");
    const std::string note = check.ok() ? check.detail : check.failure;
    std::printf("%s %d %s (%.3f s, limit %.0f s)%s%s\n", check.ok() ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.limit_s, note.empty() ? "" : ": ", note.c_str());
    if (!check.ok()) ++failed;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
