#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include "stone/cargraph.hpp"
#include "stone/error.hpp"
#include "stone/height.hpp"
#include "stone/homeo.hpp"
#include "stone/json_io.hpp"
#include "stone/partition.hpp"
#include "stone/selfsim.hpp"

namespace stone::cli {

namespace {

using nlohmann::json;
namespace jio = json_io;

struct Context {
  bool as_json = false;
  std::uint64_t seed = 0;
  std::ostream* out = nullptr;

  void emit(const json& j, const std::string& text) const { *out << (as_json ? j.dump() : text) << '\n'; }
};

struct SpaceArgs {
  std::string alpha;
  std::uint64_t n = 1;

  Space get() const { return Space(parse_ordinal(alpha), n); }
};

void add_space(CLI::App* app, SpaceArgs& s) {
  app->add_option("--alpha", s.alpha, "Cantor-Bendixson rank of the space")->required();
  app->add_option("--n", s.n, "number of maximal points")->default_val(1);
}

ClopenSet window_arg(const Space& sp, const std::string& text) {
  return text.empty() ? ClopenSet::empty(sp) : parse_clopen(sp, text);
}

// "basepoint", "random" (seeded, chunks of the window) or ';'-separated parts.
GoodPartition partition_arg(const Space& sp, const std::string& text, const std::string& window, std::uint64_t seed) {
  GoodPartition p = text == "random" ? random_partition(sp, window_arg(sp, window), seed) : parse_partition(sp, text);
  const ValidationReport r = validate(p);
  if (!r.ok()) {
    throw Error(ErrorCode::InvalidPartition, to_string(r.kind) + " at part " + std::to_string(r.part + 1) +
                                                 (r.detail.empty() ? "" : ": " + r.detail));
  }
  return p;
}

CharPair parse_pair(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto comma = text.find(',');
  if (text.size() < 5 || text.front() != '(' || text.back() != ')' || comma == std::string_view::npos) {
    throw SyntaxError(0, "expected a pair (rank,count)");
  }
  const Ordinal count = parse_ordinal(text.substr(comma + 1, text.size() - comma - 2));
  if (!count.is_finite() || count.is_zero()) throw SyntaxError(comma + 1, "count must be a positive integer");
  return CharPair::of(parse_ordinal(text.substr(1, comma - 1)), count.finite_value());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) return out;
    start = end + 1;
  }
}

SelfSimVertex vertex_arg(const SelfSimConfig& cfg, const std::string& text, Rng& rng) {
  if (text == "random") return random_vertex(rng, cfg);
  SelfSimVertex v;
  for (const auto& piece : split(text, ';')) v.pieces.push_back(parse_clopen(cfg.space, piece));
  validate(cfg, v);
  return v;
}

SelfSimConfig selfsim_config(const Space& sp, const std::string& tmpl, const std::string& q) {
  if (tmpl.empty()) {
    if (q == "random") throw std::invalid_argument("random vertices need --template");
    std::vector<ClopenSet> pieces;
    for (const auto& piece : split(q, ';')) pieces.push_back(parse_clopen(sp, piece));
    return config_from(pieces);
  }
  SelfSimConfig cfg{sp, {}};
  for (const auto& p : split(tmpl, ';')) cfg.pieces.push_back(parse_pair(p));
  validate(cfg);
  return cfg;
}

std::string cmp_text(std::strong_ordering c) { return c < 0 ? "<" : c > 0 ? ">" : "="; }

int cmp_int(std::strong_ordering c) { return c < 0 ? -1 : c > 0 ? 1 : 0; }

std::string pair_text(const CharPair& p) { return p.empty ? "empty" : to_string(p); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  std::function<void()> action;

  CLI::App app{"Countable Stone spaces as ordinal intervals", "stone"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "machine-readable output");
  app.add_option("--seed", ctx.seed, "seed for every random choice")->default_val(0);

  // ord ---------------------------------------------------------------------
  auto* ord = app.add_subcommand("ord", "ordinal calculator");
  ord->require_subcommand(1);
  std::string oa, ob;
  std::uint64_t ok = 1;
  auto unary = [&](const char* name, const char* help) {
    auto* c = ord->add_subcommand(name, help);
    c->add_option("x", oa)->required();
    return c;
  };
  auto binary = [&](const char* name, const char* help) {
    auto* c = ord->add_subcommand(name, help);
    c->add_option("a", oa)->required();
    c->add_option("b", ob)->required();
    return c;
  };
  unary("eval", "print in canonical form")->callback([&] {
    action = [&] {
      const Ordinal x = parse_ordinal(oa);
      ctx.emit(json{{"value", to_string(x)}}, to_string(x));
    };
  });
  binary("cmp", "compare two ordinals")->callback([&] {
    action = [&] {
      const auto c = parse_ordinal(oa) <=> parse_ordinal(ob);
      ctx.emit(json{{"cmp", cmp_int(c)}}, cmp_text(c));
    };
  });
  binary("add", "a + b")->callback([&] {
    action = [&] {
      const Ordinal s = parse_ordinal(oa) + parse_ordinal(ob);
      ctx.emit(json{{"value", to_string(s)}}, to_string(s));
    };
  });
  binary("sub", "the c with a + c = b")->callback([&] {
    action = [&] {
      const Ordinal c = left_sub(parse_ordinal(oa), parse_ordinal(ob));
      ctx.emit(json{{"value", to_string(c)}}, to_string(c));
    };
  });
  binary("divmod", "a = w^b * q + r")->callback([&] {
    action = [&] {
      const DivMod d = divmod_omega_pow(parse_ordinal(oa), parse_ordinal(ob));
      ctx.emit(json{{"quotient", to_string(d.quotient)}, {"remainder", to_string(d.remainder)}},
               "quotient " + to_string(d.quotient) + "\nremainder " + to_string(d.remainder));
    };
  });
  unary("rank", "Cantor-Bendixson rank of a point")->callback([&] {
    action = [&] {
      const Ordinal r = point_rank(parse_ordinal(oa));
      ctx.emit(json{{"rank", to_string(r)}}, to_string(r));
    };
  });
  auto* fseq = unary("fseq", "k-th term of the fundamental sequence");
  fseq->add_option("k", ok)->required()->check(CLI::PositiveNumber);
  fseq->callback([&] {
    action = [&] {
      const Ordinal v = fundamental_seq(parse_ordinal(oa), ok);
      ctx.emit(json{{"value", to_string(v)}}, to_string(v));
    };
  });

  // space -------------------------------------------------------------------
  auto* space = app.add_subcommand("space", "clopen subsets of X_{alpha,n}");
  space->require_subcommand(1);
  SpaceArgs sargs;
  std::string clopen_text;
  auto* cp = space->add_subcommand("char-pair", "characteristic pair of a clopen set (default: the whole space)");
  add_space(cp, sargs);
  cp->add_option("--clopen", clopen_text);
  cp->callback([&] {
    action = [&] {
      const Space sp = sargs.get();
      const ClopenSet a = clopen_text.empty() ? ClopenSet::full(sp) : parse_clopen(sp, clopen_text);
      ctx.emit(json{{"set", to_string(a)}, {"pair", jio::encode(char_pair(a))}}, pair_text(char_pair(a)));
    };
  });

  // classify ----------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "coarse type of Homeo(X_{alpha,n})");
  std::string calpha;
  std::uint64_t cn = 1;
  classify->add_option("--alpha", calpha)->required();
  classify->add_option("--n", cn)->required()->check(CLI::PositiveNumber);
  classify->callback([&] {
    action = [&] {
      const json j = jio::encode(classify_group(parse_ordinal(calpha), cn));
      ctx.emit(j, j.dump());
    };
  });

  // homeo -------------------------------------------------------------------
  auto* homeo = app.add_subcommand("homeo", "homeomorphisms between clopen sets");
  homeo->require_subcommand(1);
  std::string hfrom, hto, hpoint;
  bool hinverse = false, hno_translate = false, htrace = false;
  auto* hcheck = homeo->add_subcommand("check", "decide whether two clopen sets are homeomorphic");
  add_space(hcheck, sargs);
  hcheck->add_option("--from", hfrom)->required();
  hcheck->add_option("--to", hto)->required();
  hcheck->callback([&] {
    action = [&] {
      const Space sp = sargs.get();
      const ClopenSet a = parse_clopen(sp, hfrom);
      const ClopenSet b = parse_clopen(sp, hto);
      const bool yes = are_homeomorphic(a, b);
      ctx.emit(json{{"homeomorphic", yes}, {"from_pair", jio::encode(char_pair(a))}, {"to_pair", jio::encode(char_pair(b))}},
               std::string(yes ? "homeomorphic " : "not homeomorphic ") + pair_text(char_pair(a)) + " " +
                   pair_text(char_pair(b)));
    };
  });
  auto* hmap = homeo->add_subcommand("map", "evaluate the synthesized homeomorphism at a point");
  add_space(hmap, sargs);
  hmap->add_option("--from", hfrom)->required();
  hmap->add_option("--to", hto)->required();
  hmap->add_option("--point", hpoint)->required();
  hmap->add_flag("--inverse", hinverse, "evaluate the inverse map at a point of --to");
  hmap->add_flag("--no-translate", hno_translate, "always run the back-and-forth construction");
  hmap->add_flag("--trace", htrace, "dump the expanded matching tree");
  hmap->callback([&] {
    action = [&] {
      const Space sp = sargs.get();
      const Homeomorphism f =
          build_homeo(parse_clopen(sp, hfrom), parse_clopen(sp, hto), BuildOptions{!hno_translate});
      const Ordinal x = parse_ordinal(hpoint);
      const Ordinal y = hinverse ? f.eval_inverse(x) : f.eval(x);
      json j{{"point", to_string(x)}, {"image", to_string(y)}, {"rank", to_string(point_rank(y))}};
      std::string text = to_string(y);
      if (htrace) {
        j["trace"] = f.trace();
        text += '\n' + f.trace().dump(2);
      }
      ctx.emit(j, text);
    };
  });

  // graph -------------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "the shift graph of good partitions");
  graph->require_subcommand(1);
  std::string gp = "basepoint", gq, gwindow;
  std::uint64_t radius = 1;
  auto pair_args = [&](CLI::App* c, bool need_window) {
    add_space(c, sargs);
    c->add_option("--p", gp, "partition: basepoint, random, or parts separated by ';'")->default_val("basepoint");
    c->add_option("--q", gq)->required();
    auto* w = c->add_option("--window", gwindow, "clopen window for random partitions and BFS");
    if (need_window) w->required();
  };
  // --p random uses --seed, --q random uses --seed + 1.
  auto load_pair = [&] {
    const Space sp = sargs.get();
    return std::pair{partition_arg(sp, gp, gwindow, ctx.seed), partition_arg(sp, gq, gwindow, ctx.seed + 1)};
  };
  auto* gdefect = graph->add_subcommand("defect", "rank-beta points on which P and Q disagree");
  pair_args(gdefect, false);
  gdefect->callback([&] {
    action = [&] {
      const auto [p, q] = load_pair();
      const std::uint64_t d = defect(p, q);
      ctx.emit(json{{"defect", d}}, std::to_string(d));
    };
  });
  auto* gpath = graph->add_subcommand("path", "a path from P to Q with its distance certificate");
  pair_args(gpath, false);
  bool exact = false;
  gpath->add_flag("--exact", exact, "also run BFS inside --window (rank 1 only)");
  gpath->callback([&] {
    action = [&] {
      const auto [p, q] = load_pair();
      const DistanceCertificate c =
          certify(p, q, exact ? std::optional<ClopenSet>(window_arg(p.space, gwindow)) : std::nullopt);
      std::string text = "lower " + std::to_string(c.lower) + "\nupper " + std::to_string(c.upper);
      if (c.exact) text += "\nexact " + std::to_string(*c.exact);
      for (std::size_t k = 0; k < c.path.moves.size(); ++k) {
        const ShiftMove& m = c.path.moves[k];
        text += "\nmove " + std::to_string(k + 1) + ": " + std::to_string(m.from + 1) + " -> " +
                std::to_string(m.to + 1) + " " + to_string(m.payload);
      }
      ctx.emit(jio::encode(c), text);
    };
  });
  auto* gbfs = graph->add_subcommand("bfs", "exact distance by breadth-first search (rank 1)");
  pair_args(gbfs, true);
  gbfs->callback([&] {
    action = [&] {
      const auto [p, q] = load_pair();
      const std::uint64_t d = bfs_distance(p, q, window_arg(p.space, gwindow));
      ctx.emit(json{{"distance", d}}, std::to_string(d));
    };
  });
  auto* gball = graph->add_subcommand("ball", "DOT drawing of a ball in the windowed graph (rank 1)");
  add_space(gball, sargs);
  gball->add_option("--p", gp)->default_val("basepoint");
  gball->add_option("--window", gwindow)->required();
  gball->add_option("--radius", radius)->default_val(1);
  gball->callback([&] {
    action = [&] {
      const Space sp = sargs.get();
      const std::string dot = ball_dot(partition_arg(sp, gp, gwindow, ctx.seed), window_arg(sp, gwindow), radius);
      if (ctx.as_json) {
        out << json{{"dot", dot}}.dump() << '\n';
      } else {
        out << dot;
      }
    };
  });

  // selfsim -----------------------------------------------------------------
  auto* selfsim = app.add_subcommand("selfsim", "the diameter-three graph of X_{alpha,1}");
  selfsim->require_subcommand(1);
  std::string salpha, stemplate, sq, sq2, spoint;
  auto vertex_args = [&](CLI::App* c) {
    c->add_option("--alpha", salpha)->required();
    c->add_option("--template", stemplate, "piece pairs, e.g. \"(2,1);(1,2)\"; default: read off --q");
    c->add_option("--q", sq, "pieces separated by ';', or random")->required();
    c->add_option("--q2", sq2)->required();
  };
  // random vertices draw from one generator seeded with --seed, q first.
  auto load_vertices = [&] {
    const Space sp(parse_ordinal(salpha), 1);
    SelfSimConfig cfg = selfsim_config(sp, stemplate, sq);
    Rng rng(ctx.seed);
    SelfSimVertex a = vertex_arg(cfg, sq, rng);
    SelfSimVertex b = vertex_arg(cfg, sq2, rng);
    return std::tuple{cfg, a, b};
  };
  auto* spath = selfsim->add_subcommand("path", "a path of length at most three");
  vertex_args(spath);
  spath->callback([&] {
    action = [&] {
      const auto [cfg, a, b] = load_vertices();
      const SelfSimPath path = short_path(cfg, a, b);
      std::string text = "length " + std::to_string(path.length()) + " (" + to_string(path.branch) + ")";
      for (std::size_t k = 0; k < path.vertices.size(); ++k) {
        std::string pieces;
        for (const auto& piece : path.vertices[k].pieces) pieces += (pieces.empty() ? "" : " ; ") + to_string(piece);
        text += "\nv" + std::to_string(k) + ": " + pieces;
      }
      ctx.emit(jio::encode(path), text);
    };
  });
  auto* sinv = selfsim->add_subcommand("involution", "the involution swapping two adjacent vertices");
  vertex_args(sinv);
  sinv->add_option("--point", spoint)->required();
  sinv->callback([&] {
    action = [&] {
      const auto [cfg, a, b] = load_vertices();
      const Ordinal x = parse_ordinal(spoint);
      const Ordinal y = edge_involution(a, b).eval(x);
      ctx.emit(json{{"point", to_string(x)}, {"image", to_string(y)}}, to_string(y));
    };
  });

  // height ------------------------------------------------------------------
  auto* height = app.add_subcommand("height", "relative height of two good partitions (limit rank)");
  std::string mode = "exists";
  add_space(height, sargs);
  height->add_option("--p", gp)->default_val("basepoint");
  height->add_option("--q", gq)->required();
  height->add_option("--window", gwindow);
  height->add_option("--mode", mode)->check(CLI::IsMember({"exists", "forall"}))->default_val("exists");
  height->callback([&] {
    action = [&] {
      const auto [p, q] = load_pair();
      const HeightReport r = height_report(p, q, mode == "exists" ? HeightMode::ExistsIndex : HeightMode::AllIndices);
      std::string text = to_string(r.h);
      for (std::size_t i = 0; i < r.per_part_max_rank.size(); ++i) {
        const auto& m = r.per_part_max_rank[i];
        text += "\npart " + std::to_string(i + 1) + ": " + (m ? to_string(*m) : std::string("-"));
      }
      ctx.emit(jio::encode(r), text);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    action();
    return 0;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace stone::cli
