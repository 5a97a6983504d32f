#include "stone/json_io.hpp"

#include "stone/error.hpp"

namespace stone::json_io {

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw SyntaxError(0, std::string("bad JSON document: ") + e.what());
  }
}

}  // namespace

json encode(const Ordinal& x) { return to_string(x); }

json encode(const Space& s) { return json{{"alpha", to_string(s.alpha)}, {"n", s.n}}; }

json encode(const ClopenSet& a) {
  json ivs = json::array();
  for (const auto& iv : a.intervals()) {
    ivs.push_back(json{{"lo", iv.lo ? json(to_string(*iv.lo)) : json(nullptr)}, {"hi", to_string(iv.hi)}});
  }
  return json{{"ambient", encode(a.ambient())}, {"intervals", ivs}};
}

json encode(const CharPair& p) {
  if (p.empty) return nullptr;
  return json{{"rank", to_string(p.rank)}, {"count", p.count}};
}

json encode(const GoodPartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(encode(part));
  return json{{"space", encode(p.space)}, {"parts", parts}};
}

json encode(const ShiftMove& m) {
  return json{{"from", m.from + 1}, {"to", m.to + 1}, {"payload", to_string(m.payload)}};
}

json encode(const DistanceCertificate& c) {
  json path = json::array();
  for (const auto& m : c.path.moves) path.push_back(encode(m));
  return json{{"lower", c.lower},
              {"upper", c.upper},
              {"exact", c.exact ? json(*c.exact) : json(nullptr)},
              {"path", path}};
}

json encode(const HeightReport& r) {
  json ranks = json::array();
  for (const auto& x : r.per_part_max_rank) ranks.push_back(x ? json(to_string(*x)) : json(nullptr));
  return json{{"h", to_string(r.h)}, {"per_part_max_rank", ranks}, {"mode", to_string(r.mode)}};
}

json encode(const GroupClass& g) {
  return json{{"coarsely_bounded", g.coarsely_bounded},
              {"boundedly_generated", g.boundedly_generated},
              {"locally_bounded", g.locally_bounded}};
}

json encode(const SelfSimVertex& v) {
  json pieces = json::array();
  for (const auto& p : v.pieces) pieces.push_back(to_string(p));
  return json{{"pieces", pieces}};
}

json encode(const SelfSimPath& p) {
  json vs = json::array();
  for (const auto& v : p.vertices) vs.push_back(encode(v));
  return json{{"length", p.length()}, {"branch", to_string(p.branch)}, {"vertices", vs}};
}

Ordinal decode_ordinal(const json& j) {
  return guarded([&] { return parse_ordinal(j.get<std::string>()); });
}

Space decode_space(const json& j) {
  return guarded([&] { return Space(decode_ordinal(j.at("alpha")), j.at("n").get<std::uint64_t>()); });
}

ClopenSet decode_clopen(const json& j) {
  return guarded([&] {
    const Space sp = decode_space(j.at("ambient"));
    std::vector<Interval> ivs;
    for (const auto& iv : j.at("intervals")) {
      const json& lo = iv.at("lo");
      ivs.push_back(Interval{lo.is_null() ? std::nullopt : std::optional<Ordinal>(decode_ordinal(lo)),
                             decode_ordinal(iv.at("hi"))});
    }
    return ClopenSet::from_intervals(sp, std::move(ivs));
  });
}

CharPair decode_char_pair(const json& j) {
  if (j.is_null()) return CharPair::none();
  return guarded([&] { return CharPair::of(decode_ordinal(j.at("rank")), j.at("count").get<std::uint64_t>()); });
}

GoodPartition decode_partition(const json& j) {
  return guarded([&] {
    GoodPartition p{decode_space(j.at("space")), {}};
    for (const auto& part : j.at("parts")) p.parts.push_back(decode_clopen(part));
    return p;
  });
}

ShiftMove decode_move(const Space& space, const json& j) {
  return guarded([&] {
    const auto from = j.at("from").get<std::size_t>();
    const auto to = j.at("to").get<std::size_t>();
    if (from == 0 || to == 0) throw SyntaxError(0, "part indices start at 1");
    return ShiftMove{from - 1, to - 1, parse_clopen(space, j.at("payload").get<std::string>())};
  });
}

DistanceCertificate decode_certificate(const GoodPartition& start, const json& j) {
  return guarded([&] {
    DistanceCertificate c;
    c.lower = j.at("lower").get<std::uint64_t>();
    c.upper = j.at("upper").get<std::uint64_t>();
    if (!j.at("exact").is_null()) c.exact = j.at("exact").get<std::uint64_t>();
    c.path.start = start;
    for (const auto& m : j.at("path")) c.path.moves.push_back(decode_move(start.space, m));
    return c;
  });
}

HeightReport decode_height_report(const json& j) {
  return guarded([&] {
    HeightReport r;
    r.h = decode_ordinal(j.at("h"));
    for (const auto& x : j.at("per_part_max_rank")) {
      r.per_part_max_rank.push_back(x.is_null() ? std::nullopt : std::optional<Ordinal>(decode_ordinal(x)));
    }
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "exists" && mode != "forall") throw SyntaxError(0, "unknown height mode " + mode);
    r.mode = mode == "exists" ? HeightMode::ExistsIndex : HeightMode::AllIndices;
    return r;
  });
}

GroupClass decode_group_class(const json& j) {
  return guarded([&] {
    return GroupClass{j.at("coarsely_bounded").get<bool>(), j.at("boundedly_generated").get<bool>(),
                      j.at("locally_bounded").get<bool>()};
  });
}

}  // namespace stone::json_io
