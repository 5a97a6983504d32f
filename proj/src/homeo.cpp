#include "stone/homeo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "stone/error.hpp"

namespace stone {

using nlohmann::json;

namespace detail {

// Side 0 is the domain, side 1 the codomain. map() and map_set() go from
// side `from` to the other one; callers have already checked membership.
class HomeoNode {
 public:
  HomeoNode(ClopenSet a, ClopenSet b) : side{std::move(a), std::move(b)} {}
  virtual ~HomeoNode() = default;

  virtual Ordinal map(int from, const Ordinal& x) = 0;
  virtual ClopenSet map_set(int from, const ClopenSet& s) = 0;
  virtual json trace() = 0;

  ClopenSet side[2];

 protected:
  json header(const char* kind) const {
    return json{{"kind", kind}, {"domain", to_string(side[0])}, {"codomain", to_string(side[1])}};
  }
};

}  // namespace detail

namespace {

using detail::HomeoNode;

Ordinal apply(const Homeomorphism& h, int from, const Ordinal& x) {
  return from == 0 ? h.eval(x) : h.eval_inverse(x);
}

ClopenSet apply_set(const Homeomorphism& h, int from, const ClopenSet& s) {
  return from == 0 ? h.image(s) : h.inverse().image(s);
}

class IdentityNode : public HomeoNode {
 public:
  explicit IdentityNode(const ClopenSet& a) : HomeoNode(a, a) {}
  Ordinal map(int, const Ordinal& x) override { return x; }
  ClopenSet map_set(int, const ClopenSet& s) override { return s; }
  json trace() override { return header("identity"); }
};

// Offset of x inside a single interval, counted so that the interval is
// exactly the set of positions (0, len].
Ordinal offset_in(const Interval& iv, const Ordinal& x) {
  return iv.lo ? left_sub(*iv.lo, x) : Ordinal(1) + x;
}

Ordinal at_offset(const Interval& iv, const Ordinal& u) { return iv.lo ? *iv.lo + u : left_sub(Ordinal(1), u); }

Ordinal interval_length(const Interval& iv) { return offset_in(iv, iv.hi); }

// Order isomorphism between two single intervals of the same length.
class TranslateNode : public HomeoNode {
 public:
  TranslateNode(const ClopenSet& a, const ClopenSet& b)
      : HomeoNode(a, b), iv_{a.intervals().front(), b.intervals().front()} {}

  Ordinal map(int from, const Ordinal& x) override { return at_offset(iv_[1 - from], offset_in(iv_[from], x)); }

  ClopenSet map_set(int from, const ClopenSet& s) override {
    const ClopenSet& target = side[1 - from];
    ClopenSet out = ClopenSet::empty(target.ambient());
    for (const auto& iv : s.intervals()) {
      const Ordinal hi = map(from, iv.hi);
      if (iv.lo && contains(side[from], *iv.lo)) {
        out = unite(out, ClopenSet::interval(target.ambient(), map(from, *iv.lo), hi));
      } else {
        out = unite(out, intersect(target, ClopenSet::initial(target.ambient(), hi)));
      }
    }
    return out;
  }

  json trace() override { return header("translate"); }

 private:
  Interval iv_[2];
};

// Finite sets of isolated points, matched in increasing order. Each interval
// is a run of consecutive integers past its lower end.
class FiniteNode : public HomeoNode {
 public:
  FiniteNode(const ClopenSet& a, const ClopenSet& b) : HomeoNode(a, b) {}

  Ordinal map(int from, const Ordinal& x) override { return nth(side[1 - from], index_of(side[from], x)); }

  ClopenSet map_set(int from, const ClopenSet& s) override {
    std::vector<Interval> out;
    for (const auto& x : rank_points(s, Ordinal(0))) {
      const Ordinal y = map(from, x);
      out.push_back(is_successor(y) ? Interval{predecessor(y), y} : Interval{std::nullopt, y});
    }
    return ClopenSet::from_intervals(side[1 - from].ambient(), std::move(out));
  }

  json trace() override { return header("finite"); }

 private:
  static std::uint64_t run_length(const Interval& iv) { return interval_length(iv).finite_value(); }

  static std::uint64_t index_of(const ClopenSet& a, const Ordinal& x) {
    std::uint64_t before = 0;
    for (const auto& iv : a.intervals()) {
      if (x <= iv.hi) return before + offset_in(iv, x).finite_value() - 1;
      before += run_length(iv);
    }
    throw std::logic_error("FiniteNode: point outside its side");
  }

  static Ordinal nth(const ClopenSet& a, std::uint64_t k) {
    for (const auto& iv : a.intervals()) {
      const std::uint64_t len = run_length(iv);
      if (k < len) return at_offset(iv, Ordinal(k + 1));
      k -= len;
    }
    throw std::logic_error("FiniteNode: index past the end");
  }
};

class GlueNode : public HomeoNode {
 public:
  GlueNode(ClopenSet a, ClopenSet b, std::vector<Homeomorphism> pieces)
      : HomeoNode(std::move(a), std::move(b)), pieces_(std::move(pieces)) {}

  Ordinal map(int from, const Ordinal& x) override {
    for (const auto& p : pieces_) {
      const ClopenSet& d = from == 0 ? p.domain() : p.codomain();
      if (contains(d, x)) return apply(p, from, x);
    }
    throw std::logic_error("GlueNode: point in no piece");
  }

  ClopenSet map_set(int from, const ClopenSet& s) override {
    ClopenSet out = ClopenSet::empty(side[1 - from].ambient());
    for (const auto& p : pieces_) {
      const ClopenSet part = intersect(s, from == 0 ? p.domain() : p.codomain());
      if (!part.is_empty()) out = unite(out, apply_set(p, from, part));
    }
    return out;
  }

  json trace() override {
    json j = header("glue");
    j["pieces"] = json::array();
    for (const auto& p : pieces_) j["pieces"].push_back(p.trace());
    return j;
  }

 private:
  std::vector<Homeomorphism> pieces_;
};

Homeomorphism build_node(const ClopenSet& a, const ClopenSet& b, const BuildOptions& opt);

// Two sets of pair (g, 1) with g > 0: each has a single point of top rank.
// Every other point lies in one of the chunks
//   chunk 0 = set \ (top[k0], top],   chunk p = (top[k0+p-1], top[k0+p]],
// where top[k] is the fundamental sequence of the top point and k0 is the
// first index landing inside the top point's interval. Consecutive chunks are
// merged into blocks A1, B1, A2, B2, ... each strictly dominating the
// previous one in characteristic pair. Round n then maps what is left of An
// onto a copy B'n inside Bn, and a copy A'(n+1) inside A(n+1) onto the rest
// of Bn.
class BackAndForthNode : public HomeoNode {
 public:
  BackAndForthNode(const ClopenSet& a, const ClopenSet& b, const BuildOptions& opt)
      : HomeoNode(a, b), opt_(opt) {
    const Ordinal g = char_pair(a).rank;
    for (int s = 0; s < 2; ++s) {
      Side& sd = sides_[s];
      sd.top = rank_points(side[s], g).front();
      for (const auto& iv : side[s].intervals()) {
        if (sd.top <= iv.hi) {
          sd.k0 = iv.lo ? fundamental_index_reaching(sd.top, *iv.lo) : 1;
          break;
        }
      }
      sd.tail_start = fundamental_seq(sd.top, sd.k0);
    }
  }

  Ordinal map(int from, const Ordinal& x) override {
    std::lock_guard lock(mu_);
    if (x == sides_[from].top) return sides_[1 - from].top;
    auto& memo = memo_[from];
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const Block& blk = complete_block_at(from, chunk_pos(from, x));
    for (const auto& piece : blk.pieces) {
      if (contains(piece.set, x)) {
        const Ordinal y = apply(subs_[piece.map], from, x);
        memo.emplace(x, y);
        return y;
      }
    }
    throw std::logic_error("BackAndForthNode: point in no piece of its block");
  }

  ClopenSet map_set(int from, const ClopenSet& s) override {
    std::lock_guard lock(mu_);
    const Side& sd = sides_[from];
    if (s.is_empty()) return ClopenSet::empty(side[1 - from].ambient());
    if (contains(s, sd.top)) return difference(side[1 - from], map_set(from, difference(side[from], s)));
    const ClopenSet tail = intersect(s, ClopenSet::interval(s.ambient(), sd.tail_start, sd.top));
    const std::size_t last = tail.is_empty() ? 0 : chunk_pos(from, tail.intervals().back().hi);
    complete_block_at(from, last);
    ClopenSet out = ClopenSet::empty(side[1 - from].ambient());
    for (const auto& blk : sd.blocks) {
      for (const auto& piece : blk.pieces) {
        const ClopenSet part = intersect(s, piece.set);
        if (!part.is_empty()) out = unite(out, apply_set(subs_[piece.map], from, part));
      }
      if (blk.last_chunk >= last) break;
    }
    return out;
  }

  json trace() override {
    std::lock_guard lock(mu_);
    json j = header("back_and_forth");
    j["top"] = {to_string(sides_[0].top), to_string(sides_[1].top)};
    j["blocks"] = json::array();
    const std::size_t rounds = std::max(sides_[0].blocks.size(), sides_[1].blocks.size());
    for (std::size_t n = 0; n < rounds; ++n) {
      for (int s = 0; s < 2; ++s) {
        if (n >= sides_[s].blocks.size()) continue;
        const Block& blk = sides_[s].blocks[n];
        json pieces = json::array();
        for (const auto& p : blk.pieces) pieces.push_back({{"set", to_string(p.set)}, {"map", p.map}});
        j["blocks"].push_back({{"side", s == 0 ? "domain" : "codomain"},
                               {"round", n + 1},
                               {"set", to_string(blk.set)},
                               {"pair", to_string(blk.pair)},
                               {"pieces", pieces}});
      }
    }
    j["maps"] = json::array();
    for (const auto& h : subs_) j["maps"].push_back(h.trace());
    return j;
  }

 private:
  struct Piece {
    ClopenSet set;
    std::size_t map;
  };
  struct Block {
    std::size_t last_chunk;
    ClopenSet set;
    CharPair pair;
    std::vector<Piece> pieces;
  };
  struct Side {
    Ordinal top;
    std::uint64_t k0 = 1;
    Ordinal tail_start;
    std::size_t next_chunk = 0;
    std::vector<Block> blocks;
  };

  std::size_t chunk_pos(int s, const Ordinal& x) const {
    const Side& sd = sides_[s];
    if (x <= sd.tail_start || x > sd.top) return 0;
    return fundamental_index_reaching(sd.top, x) - sd.k0;
  }

  ClopenSet chunk(int s, std::size_t p) const {
    const Side& sd = sides_[s];
    const Space& amb = side[s].ambient();
    if (p == 0) return difference(side[s], ClopenSet::interval(amb, sd.tail_start, sd.top));
    return ClopenSet::interval(amb, fundamental_seq(sd.top, sd.k0 + p - 1), fundamental_seq(sd.top, sd.k0 + p));
  }

  void build_next() {
    const std::size_t na = sides_[0].blocks.size();
    const std::size_t nb = sides_[1].blocks.size();
    const int s = na == nb ? 0 : 1;
    Side& sd = sides_[s];
    ClopenSet set = chunk(s, sd.next_chunk++);
    if (na + nb > 0) {
      const CharPair& prev = sides_[1 - s].blocks.back().pair;
      while (!(char_pair(set) > prev)) set = unite(set, chunk(s, sd.next_chunk++));
    }
    sd.blocks.push_back(Block{sd.next_chunk - 1, set, char_pair(set), {}});

    Block& mine = sd.blocks.back();
    if (s == 1) {
      // Round n, forward half: the rest of An onto a copy inside Bn.
      Block& a = sides_[0].blocks[nb];
      ClopenSet rest = a.set;
      for (const auto& p : a.pieces) rest = difference(rest, p.set);
      ClopenSet copy = embed_copy(mine.set, char_pair(rest));
      link(a, std::move(rest), mine, std::move(copy));
    } else if (na > 0) {
      // Round n, backward half: a copy inside A(n+1) onto the rest of Bn.
      Block& b = sides_[1].blocks.back();
      ClopenSet rest = b.set;
      for (const auto& p : b.pieces) rest = difference(rest, p.set);
      ClopenSet copy = embed_copy(mine.set, char_pair(rest));
      link(mine, std::move(copy), b, std::move(rest));
    }
  }

  void link(Block& a, ClopenSet from, Block& b, ClopenSet to) {
    if (from.is_empty()) return;
    subs_.push_back(build_node(from, to, opt_));
    a.pieces.push_back(Piece{std::move(from), subs_.size() - 1});
    b.pieces.push_back(Piece{std::move(to), subs_.size() - 1});
  }

  // A domain block is finished once the codomain block of its round exists;
  // a codomain block once the next domain block exists.
  const Block& complete_block_at(int s, std::size_t pos) {
    Side& sd = sides_[s];
    while (sd.blocks.empty() || sd.blocks.back().last_chunk < pos) build_next();
    const auto it = std::lower_bound(sd.blocks.begin(), sd.blocks.end(), pos,
                                     [](const Block& b, std::size_t p) { return b.last_chunk < p; });
    const std::size_t i = static_cast<std::size_t>(it - sd.blocks.begin());
    const std::size_t needed = s == 0 ? i + 1 : i + 2;
    while (sides_[1 - s].blocks.size() < needed) build_next();
    return sd.blocks[i];
  }

  BuildOptions opt_;
  Side sides_[2];
  std::vector<Homeomorphism> subs_;
  std::map<Ordinal, Ordinal> memo_[2];
  std::recursive_mutex mu_;
};

Homeomorphism build_node(const ClopenSet& a, const ClopenSet& b, const BuildOptions& opt) {
  if (a == b) return Homeomorphism::identity(a);
  const CharPair pa = char_pair(a);
  if (pa != char_pair(b)) {
    throw Error(ErrorCode::NotHomeomorphic,
                to_string(a) + " has pair " + to_string(pa) + ", " + to_string(b) + " has " + to_string(char_pair(b)));
  }
  if (pa.empty) return Homeomorphism(std::make_shared<GlueNode>(a, b, std::vector<Homeomorphism>{}));
  if (opt.translate && a.intervals().size() == 1 && b.intervals().size() == 1 &&
      interval_length(a.intervals().front()) == interval_length(b.intervals().front())) {
    return Homeomorphism(std::make_shared<TranslateNode>(a, b));
  }
  if (pa.rank.is_zero()) return Homeomorphism(std::make_shared<FiniteNode>(a, b));
  if (pa.count > 1) {
    const auto ua = split_units(a);
    const auto ub = split_units(b);
    std::vector<Homeomorphism> pieces;
    for (std::size_t i = 0; i < ua.size(); ++i) pieces.push_back(build_node(ua[i], ub[i], opt));
    return Homeomorphism(std::make_shared<GlueNode>(a, b, std::move(pieces)));
  }
  return Homeomorphism(std::make_shared<BackAndForthNode>(a, b, opt));
}

void require_inside(const ClopenSet& a, const Ordinal& x) {
  if (x > a.ambient().max_point() || !contains(a, x)) {
    throw Error(ErrorCode::PointNotInDomain, to_string(x) + " is not in " + to_string(a));
  }
}

}  // namespace

Homeomorphism Homeomorphism::identity(const ClopenSet& a) { return Homeomorphism(std::make_shared<IdentityNode>(a)); }

const ClopenSet& Homeomorphism::domain() const { return node_->side[inverted_ ? 1 : 0]; }

const ClopenSet& Homeomorphism::codomain() const { return node_->side[inverted_ ? 0 : 1]; }

Ordinal Homeomorphism::eval(const Ordinal& x) const {
  require_inside(domain(), x);
  return node_->map(inverted_ ? 1 : 0, x);
}

Ordinal Homeomorphism::eval_inverse(const Ordinal& y) const { return inverse().eval(y); }

ClopenSet Homeomorphism::image(const ClopenSet& s) const {
  if (!is_subset(s, domain())) {
    throw Error(ErrorCode::PointNotInDomain, to_string(s) + " is not inside " + to_string(domain()));
  }
  return node_->map_set(inverted_ ? 1 : 0, s);
}

Homeomorphism Homeomorphism::inverse() const { return Homeomorphism(node_, !inverted_); }

json Homeomorphism::trace() const {
  json j = node_->trace();
  if (inverted_) j = json{{"kind", "inverse"}, {"of", j}};
  return j;
}

bool are_homeomorphic(const ClopenSet& a, const ClopenSet& b) { return char_pair(a) == char_pair(b); }

Homeomorphism build_homeo(const ClopenSet& a, const ClopenSet& b, const BuildOptions& opt) {
  if (a.is_empty() && b.is_empty()) throw Error(ErrorCode::EmptySets, "both sets are empty");
  return build_node(a, b, opt);
}

Homeomorphism glue(const std::vector<Homeomorphism>& pieces) {
  if (pieces.empty()) throw Error(ErrorCode::EmptyInput, "nothing to glue");
  ClopenSet dom = ClopenSet::empty(pieces.front().domain().ambient());
  ClopenSet cod = ClopenSet::empty(pieces.front().codomain().ambient());
  for (const auto& p : pieces) {
    if (!are_disjoint(dom, p.domain()) || !are_disjoint(cod, p.codomain())) {
      throw Error(ErrorCode::NotAPartition, "glued pieces overlap");
    }
    dom = unite(dom, p.domain());
    cod = unite(cod, p.codomain());
  }
  if (pieces.size() == 1) return pieces.front();
  return Homeomorphism(std::make_shared<GlueNode>(std::move(dom), std::move(cod), pieces));
}

Homeomorphism partition_map(const std::vector<ClopenSet>& as, const std::vector<ClopenSet>& bs,
                            const BuildOptions& opt) {
  if (as.empty() || as.size() != bs.size()) throw Error(ErrorCode::PieceMismatch, "piece lists differ in length");
  auto check_partition = [](const std::vector<ClopenSet>& ps) {
    ClopenSet seen = ClopenSet::empty(ps.front().ambient());
    for (const auto& p : ps) {
      if (!are_disjoint(seen, p)) throw Error(ErrorCode::NotAPartition, "pieces overlap at " + to_string(intersect(seen, p)));
      seen = unite(seen, p);
    }
    if (seen != ClopenSet::full(seen.ambient())) {
      throw Error(ErrorCode::NotAPartition, "pieces miss " + to_string(complement(seen)));
    }
  };
  check_partition(as);
  check_partition(bs);
  std::vector<Homeomorphism> pieces;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (!are_homeomorphic(as[i], bs[i])) {
      throw Error(ErrorCode::PieceMismatch, "piece " + std::to_string(i + 1) + ": " + to_string(char_pair(as[i])) +
                                                " vs " + to_string(char_pair(bs[i])));
    }
    if (!as[i].is_empty()) pieces.push_back(build_node(as[i], bs[i], opt));
  }
  return glue(pieces);
}

GroupClass classify_group(const Ordinal& alpha, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("a space needs at least one maximal point");
  if (n == 1 || alpha.is_zero()) return GroupClass{true, true, true};
  if (is_successor(alpha)) return GroupClass{false, true, true};
  return GroupClass{false, false, true};
}

}  // namespace stone
