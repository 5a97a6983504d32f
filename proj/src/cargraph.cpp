#include "stone/cargraph.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "stone/error.hpp"

namespace stone {

namespace {

void require_rank_one(const Space& space) {
  if (!(space.alpha == Ordinal(1))) {
    throw Error(ErrorCode::RankNotOne, "windowed search needs rank 1, got " + to_string(space.alpha));
  }
}

std::vector<Ordinal> window_points(const ClopenSet& window) {
  if (window.is_empty()) return {};
  if (!(char_pair(window).rank.is_zero())) {
    throw Error(ErrorCode::WindowTooSmall, "window " + to_string(window) + " is not a finite set of isolated points");
  }
  return rank_points(window, Ordinal(0));
}

}  // namespace

std::vector<GoodPartition> Path::vertices() const {
  std::vector<GoodPartition> out{start};
  for (const auto& m : moves) out.push_back(shift(out.back(), m));
  return out;
}

GoodPartition Path::end() const {
  GoodPartition cur = start;
  for (const auto& m : moves) cur = shift(cur, m);
  return cur;
}

std::uint64_t defect(const GoodPartition& p, const GoodPartition& q) {
  const Ordinal beta = shift_rank(p.space);
  Count total = Count::finite(0);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (std::size_t j = 0; j < q.parts.size(); ++j) {
      if (i != j) total = total + count_rank(intersect(p.parts[i], q.parts[j]), beta);
    }
  }
  if (total.is_infinite()) throw Error(ErrorCode::InvalidPartition, "infinite defect: inputs are not good partitions");
  return total.value();
}

Path connect_path(const GoodPartition& p, const GoodPartition& q) {
  const Ordinal beta = shift_rank(p.space);
  Path path{p, {}};
  GoodPartition cur = p;
  const std::size_t n = p.parts.size();
  auto apply = [&](ShiftMove m) {
    cur = shift(cur, m);
    path.moves.push_back(std::move(m));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const ClopenSet stray = intersect(cur.parts[i], q.parts[j]);
      if (stray.is_empty()) continue;
      const Count d = count_rank(stray, beta);
      if (!d.is_zero()) {
        for (auto& unit : split_units(stray)) apply(ShiftMove{i, j, std::move(unit)});
      } else {
        ClopenSet v = find_copy(difference(cur.parts[i], q.parts[j]), beta);
        apply(ShiftMove{i, j, unite(v, stray)});
        apply(ShiftMove{j, i, std::move(v)});
      }
    }
  }
  return path;
}

std::vector<GoodPartition> neighbors(const GoodPartition& p, const ClopenSet& window) {
  require_rank_one(p.space);
  std::vector<GoodPartition> out;
  for (const auto& x : window_points(window)) {
    const std::size_t from = owner(p, x);
    for (std::size_t to = 0; to < p.parts.size(); ++to) {
      if (to != from) out.push_back(shift(p, ShiftMove{from, to, ClopenSet::singleton(p.space, x)}));
    }
  }
  return out;
}

std::uint64_t bfs_distance(const GoodPartition& p, const GoodPartition& q, const ClopenSet& window) {
  require_rank_one(p.space);
  if (!(p.space == q.space)) throw Error(ErrorCode::AmbientMismatch, "partitions of different spaces");
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const ClopenSet diff = symdiff(p.parts[i], q.parts[i]);
    if (!is_subset(diff, window)) {
      throw Error(ErrorCode::WindowTooSmall, "disagreement " + to_string(difference(diff, window)) + " escapes window");
    }
  }
  const std::vector<Ordinal> pts = window_points(window);
  const std::uint64_t n = p.parts.size();
  auto encode = [&](const GoodPartition& g) {
    std::uint64_t code = 0;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) code = code * n + owner(g, *it);
    return code;
  };
  std::vector<std::uint64_t> place(pts.size(), 1);
  for (std::size_t k = 1; k < pts.size(); ++k) place[k] = place[k - 1] * n;

  const std::uint64_t source = encode(p);
  const std::uint64_t target = encode(q);
  std::unordered_map<std::uint64_t, std::uint64_t> dist{{source, 0}};
  std::deque<std::uint64_t> frontier{source};
  while (!frontier.empty()) {
    const std::uint64_t s = frontier.front();
    frontier.pop_front();
    const std::uint64_t ds = dist.at(s);
    if (s == target) return ds;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::uint64_t digit = (s / place[k]) % n;
      for (std::uint64_t t = 0; t < n; ++t) {
        if (t == digit) continue;
        const std::uint64_t next = s - digit * place[k] + t * place[k];
        if (dist.emplace(next, ds + 1).second) frontier.push_back(next);
      }
    }
  }
  throw std::logic_error("bfs_distance: target unreachable");
}

DistanceCertificate certify(const GoodPartition& p, const GoodPartition& q, const std::optional<ClopenSet>& window) {
  DistanceCertificate cert;
  cert.lower = defect(p, q);
  cert.path = connect_path(p, q);
  cert.upper = cert.path.length();
  if (window) cert.exact = bfs_distance(p, q, *window);
  return cert;
}

std::string ball_dot(const GoodPartition& p, const ClopenSet& window, std::uint64_t radius) {
  require_rank_one(p.space);
  const GoodPartition base = basepoint(p.space);
  const std::vector<Ordinal> pts = window_points(window);
  auto label = [&](const GoodPartition& g) {
    std::string out;
    for (const auto& x : pts) {
      const std::size_t o = owner(g, x);
      if (o == owner(base, x)) continue;
      if (!out.empty()) out += ", ";
      out += to_string(x) + "->" + std::to_string(o + 1);
    }
    return out.empty() ? std::string("base") : out;
  };
  auto key = [&](const GoodPartition& g) {
    std::string k;
    for (const auto& x : pts) k += static_cast<char>('0' + owner(g, x));
    return k;
  };

  std::map<std::string, std::size_t> ids;
  std::vector<GoodPartition> verts{p};
  std::vector<std::uint64_t> depth{0};
  ids.emplace(key(p), 0);
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> edges;
  // Vertices on the boundary are not expanded, but edges among them are kept
  // so the drawing is the induced subgraph.
  for (std::size_t head = 0; head < verts.size(); ++head) {
    const GoodPartition cur = verts[head];
    for (const auto& x : pts) {
      const std::size_t from = owner(cur, x);
      for (std::size_t to = 0; to < cur.parts.size(); ++to) {
        if (to == from) continue;
        GoodPartition next = shift(cur, ShiftMove{from, to, ClopenSet::singleton(cur.space, x)});
        auto it = ids.find(key(next));
        if (it == ids.end()) {
          if (depth[head] == radius) continue;
          it = ids.emplace(key(next), verts.size()).first;
          verts.push_back(std::move(next));
          depth.push_back(depth[head] + 1);
        }
        if (head < it->second) edges.emplace_back(head, it->second, to_string(x));
      }
    }
  }

  std::ostringstream dot;
  dot << "graph ball {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < verts.size(); ++v) {
    dot << "  v" << v << " [label=\"" << label(verts[v]) << "\"];\n";
  }
  for (const auto& [a, b, lbl] : edges) dot << "  v" << a << " -- v" << b << " [label=\"" << lbl << "\"];\n";
  dot << "}\n";
  return dot.str();
}

}  // namespace stone
