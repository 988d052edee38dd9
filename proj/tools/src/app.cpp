#include "medkit/cli/app.hpp"

#include "medkit/barycenter.hpp"
#include "medkit/centroid.hpp"
#include "medkit/chains.hpp"
#include "medkit/cli/report.hpp"
#include "medkit/cli/sweep.hpp"
#include "medkit/corpus.hpp"
#include "medkit/error.hpp"
#include "medkit/factors.hpp"
#include "medkit/io.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace medkit::cli {

namespace {

// Size guards: warnings only. Brute-force oracles have their own limits.
constexpr std::size_t kWarnVertices = std::size_t{1} << 14;
constexpr std::size_t kDefaultMaxWalls = 64;
constexpr std::size_t kPairOracle = 200;
constexpr std::size_t kTripleOracle = 64;
constexpr std::size_t kIsomorphismOracle = 1024;
constexpr std::size_t kAutomorphismLimit = 256;

struct Options {
  std::string command;
  std::string input;
  std::vector<std::string> generator;
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
  std::string out;
  std::string dot;
  std::string format = "structured";
  std::vector<std::string> sets;
  std::vector<std::string> measures;
  std::string family;
  std::uint32_t r = 0;
  std::size_t length = 3;
  Vertex base = 0;
  bool timing = false;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
};

struct Context {
  explicit Context(const Options& o) : opt(o) {}

  const Options& opt;
  std::optional<Generated> input;
  std::string label;
  Json params = Json::object();
  Report report;
  std::optional<Graph> dot_graph;
  std::vector<std::pair<VertexSet, std::string>> highlights;

  const Graph& graph() {
    if (!graph_) {
      if (!input) throw Error(ErrorKind::InvalidSpec, "command needs --input or --generator");
      if (const auto* p = std::get_if<Pocset>(&*input)) {
        graph_ = dual_median_graph(*p).graph;
        report.warn("pocset input replaced by its dual median graph");
      } else {
        graph_ = std::get<Graph>(*input);
      }
      if (graph_->order() > kWarnVertices) {
        report.warn(std::to_string(graph_->order()) + " vertices exceed the size guard of " +
                    std::to_string(kWarnVertices));
      }
    }
    return *graph_;
  }

  const Wallspace& walls() {
    if (!ws_) {
      // Every command past validate assumes a median graph.
      const auto verdict = is_median_graph(graph());
      if (!verdict.is_median) {
        const auto& w = *verdict.witness;
        throw Error(ErrorKind::NotMedian, "input is not a median graph: triple (" + std::to_string(w[0]) + ", " +
                                              std::to_string(w[1]) + ", " + std::to_string(w[2]) + ") has " +
                                              std::to_string(verdict.witness_median_count) + " medians");
      }
      ws_.emplace(graph());
      const std::size_t guard = max_walls();
      if (ws_->wall_count() > guard) {
        report.warn(std::to_string(ws_->wall_count()) + " walls exceed the guard of " + std::to_string(guard) +
                    " (MEDKIT_MAX_WALLS); exponential steps may be slow");
      }
    }
    return *ws_;
  }

  const oracle::Matrix* oracle_distances(const std::string& what) {
    if (graph().order() > kPairOracle) {
      report.skip(what, std::to_string(graph().order()) + " vertices > " + std::to_string(kPairOracle));
      return nullptr;
    }
    if (!dist_) dist_ = oracle::distances(graph());
    return &*dist_;
  }

  static std::size_t max_walls() {
    const char* env = std::getenv("MEDKIT_MAX_WALLS");
    if (!env || !*env) return kDefaultMaxWalls;
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidSpec, std::string("MEDKIT_MAX_WALLS is not a count: ") + env);
  }

 private:
  std::optional<Graph> graph_;
  std::optional<Wallspace> ws_;
  std::optional<oracle::Matrix> dist_;
};

Json wall_ids(const std::vector<WallId>& ws) { return Json(ws); }

Json triple_json(const std::array<Vertex, 3>& t) { return Json::array({t[0], t[1], t[2]}); }

VertexSet parse_set(const std::string& text, std::size_t order) {
  if (text == "all") return VertexSet::full(order);
  const Json j = (!text.empty() && text.front() == '[') ? parse_json(text) : read_json_file(text);
  return vertex_set_from_json(j, order);
}

/// "v:p/q,v:p/q" shorthand, a JSON literal, or a file.
ProbMeasure parse_measure(const std::string& text, std::size_t order) {
  if (!text.empty() && text.front() == '[') return measure_from_json(parse_json(text), order);
  if (text.find(':') == std::string::npos) return measure_from_json(read_json_file(text), order);
  Json j = Json::array();
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "measure entry '" + item + "' lacks ':'");
    const std::string weight = item.substr(colon + 1);
    const auto slash = weight.find('/');
    Json e;
    try {
      e["vertex"] = std::stoll(item.substr(0, colon));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "measure entry '" + item + "' has no vertex id");
    }
    e["num"] = weight.substr(0, slash);
    e["den"] = slash == std::string::npos ? std::string("1") : weight.substr(slash + 1);
    j.push_back(std::move(e));
    start = end + 1;
  }
  return measure_from_json(j, order);
}

void require_sets(const Context& ctx, std::size_t count) {
  if (ctx.opt.sets.size() != count) {
    throw Error(ErrorKind::InvalidSpec, ctx.opt.command + " needs exactly " + std::to_string(count) + " --set value" +
                                            (count == 1 ? "" : "s"));
  }
}

// Commands ---------------------------------------------------------------

void cmd_validate(Context& ctx) {
  auto& rep = ctx.report;
  if (const auto* p = ctx.input ? std::get_if<Pocset>(&*ctx.input) : nullptr) {
    rep.results["pocset"] = {{"elements", p->size()}, {"walls", p->wall_count()}};
  }
  const Graph& g = ctx.graph();
  const auto verdict = is_median_graph(g);
  rep.results["vertices"] = g.order();
  rep.results["edges"] = g.edges().size();
  rep.results["is_median"] = verdict.is_median;
  rep.results["witness"] = verdict.witness ? triple_json(*verdict.witness) : Json(nullptr);
  if (verdict.witness) rep.results["witness_median_count"] = verdict.witness_median_count;
  std::string detail;
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    detail = "triple (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ") has " +
             std::to_string(verdict.witness_median_count) + " medians";
  }
  rep.check("median", verdict.is_median, detail);
  if (g.order() <= kTripleOracle) {
    rep.check("median oracle", oracle::is_median_graph(oracle::distances(g)) == verdict.is_median);
  } else {
    rep.skip("median oracle", std::to_string(g.order()) + " vertices > " + std::to_string(kTripleOracle));
  }
  ctx.dot_graph = g;
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    ctx.highlights.push_back({VertexSet(g.order(), {w[0], w[1], w[2]}), "tomato"});
  }
}

void cmd_walls(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const Graph& g = ws.graph();
  Json list = Json::array();
  for (const Wall& w : ws.walls()) {
    Json e;
    e["id"] = w.id;
    e["sides"] = Json::array({to_json(w.sides[0]), to_json(w.sides[1])});
    e["edge"] = Json::array({w.representative.u, w.representative.v});
    e["edges"] = w.edges.size();
    list.push_back(std::move(e));
  }
  rep.results["walls"] = ws.wall_count();
  rep.results["halfspaces"] = ws.halfspace_count();
  rep.results["list"] = std::move(list);
  if (const auto* d = ctx.oracle_distances("Crofton and halfspace oracles")) {
    bool crofton = true;
    for (Vertex x = 0; x < g.order() && crofton; ++x) {
      for (Vertex y = x + 1; y < g.order(); ++y) {
        const auto between = halfspaces_between(ws, VertexSet::singleton(g.order(), x), VertexSet::singleton(g.order(), y));
        if (static_cast<int>(between.size()) != (*d)[x][y]) {
          crofton = false;
          break;
        }
      }
    }
    rep.check("crofton", crofton);
    auto expected = oracle::halfspaces(g, *d);
    std::vector<VertexSet> actual;
    for (Halfspace h : ws.halfspaces()) actual.push_back(ws.vertices(h));
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    rep.check("halfspace oracle", expected == actual);
  }
  ctx.dot_graph = g;
}

void cmd_rank(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const std::size_t r = rank(ws);
  const auto family = maximum_transverse_family(ws);
  rep.results["rank"] = r;
  rep.results["family"] = wall_ids(family);
  rep.check("family size equals rank", family.size() == r);
  bool transverse = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      transverse = transverse && oracle::transverse(ws.wall(family[i]).sides[0], ws.wall(family[j]).sides[0]);
    }
  }
  rep.check("family pairwise transverse", transverse);
  ctx.dot_graph = ws.graph();
}

void cmd_factors(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const Graph& g = ws.graph();
  const auto f = irreducible_factors(ws);
  Json list = Json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    Json e;
    e["vertices"] = f.factors[i].order();
    e["edges"] = f.factors[i].edges().size();
    e["walls"] = wall_ids(f.wall_groups[i]);
    e["graph"] = to_json(f.factors[i]);
    list.push_back(std::move(e));
  }
  rep.results["count"] = f.factors.size();
  rep.results["factors"] = std::move(list);
  rep.check("reconstruction", verify_reconstruction(g, f));
  if (g.order() <= kIsomorphismOracle) {
    rep.check("isomorphism oracle", oracle::isomorphic(product_of(f), g));
  } else {
    rep.skip("isomorphism oracle", std::to_string(g.order()) + " vertices > " + std::to_string(kIsomorphismOracle));
  }
  ctx.dot_graph = g;
}

void cmd_separate(Context& ctx) {
  require_sets(ctx, 2);
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const auto n = ws.order();
  const VertexSet a = parse_set(ctx.opt.sets[0], n), b = parse_set(ctx.opt.sets[1], n);
  ctx.params["sets"] = Json::array({to_json(a), to_json(b)});
  const Halfspace h = separate(ws, a, b);
  rep.results["a"] = to_json(a);
  rep.results["b"] = to_json(b);
  rep.results["halfspace"] = h.id();
  rep.results["wall"] = h.wall;
  rep.results["vertices"] = to_json(ws.vertices(h));
  rep.check("separates", b.is_subset_of(ws.vertices(h)) && !a.intersects(ws.vertices(h)));
  if (const auto* d = ctx.oracle_distances("halfspace oracle")) {
    const auto hs = oracle::halfspaces(ws.graph(), *d);
    rep.check("halfspace oracle", std::find(hs.begin(), hs.end(), ws.vertices(h)) != hs.end());
  }
  ctx.dot_graph = ws.graph();
  ctx.highlights = {{ws.vertices(h), "palegreen"}, {a, "lightblue"}, {b, "gold"}};
}

void cmd_hull(Context& ctx) {
  require_sets(ctx, 1);
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const Graph& g = ws.graph();
  const VertexSet s = parse_set(ctx.opt.sets[0], g.order());
  ctx.params["sets"] = Json::array({to_json(s)});
  const VertexSet hull = convex_hull(g, s);
  const VertexSet mhull = median_hull(g, s);
  rep.results["set"] = to_json(s);
  rep.results["convex"] = is_convex(g, s);
  rep.results["hull"] = to_json(hull);
  rep.results["median_hull"] = to_json(mhull);
  rep.check("median hull inside hull", s.is_subset_of(mhull) && mhull.is_subset_of(hull));
  if (const auto* d = ctx.oracle_distances("hull oracle")) {
    rep.check("hull oracle", hull == oracle::hull_by_halfspaces(oracle::halfspaces(g, *d), s));
  }
  ctx.dot_graph = g;
  ctx.highlights = {{hull, "lightblue"}, {s, "gold"}};
}

void cmd_core(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const Graph& g = ws.graph();
  const auto core = median_core(ws);
  rep.results["core"] = to_json(core.core);
  rep.results["seeds"] = to_json(core.seeds);
  rep.results["triples"] = core.triples;
  rep.results["non_constant_triples"] = core.non_constant_triples;
  rep.results["no_regular_directions"] = core.no_regular_directions;
  if (core.non_constant_triples > 0) {
    rep.warn(std::to_string(core.non_constant_triples) + " separated triples have no constant median and were skipped");
  }
  rep.check("core median-closed", median_hull(g, core.core) == core.core);
  bool invariant = true;
  for (const Automorphism& a : enumerate_automorphisms(g, kAutomorphismLimit)) {
    invariant = invariant && apply_automorphism(g, a, core.core) == core.core;
  }
  rep.check("core automorphism-invariant", invariant);
  ctx.dot_graph = g;
  ctx.highlights = {{core.core, "gold"}};
}

void cmd_chains(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  if (ctx.opt.base >= ws.order()) throw Error(ErrorKind::InvalidSpec, "--base is not a vertex");
  ctx.params["r"] = ctx.opt.r;
  ctx.params["length"] = ctx.opt.length;
  ctx.params["base"] = ctx.opt.base;
  const auto search = find_chains(ws, ctx.opt.r, ctx.opt.length);
  Json chains = Json::array();
  for (const Chain& c : search.chains) chains.push_back(to_json(c.members));
  rep.results["spacing"] = ctx.opt.r;
  rep.results["length"] = ctx.opt.length;
  rep.results["count"] = search.chains.size();
  rep.results["truncated"] = search.truncated;
  rep.results["chains"] = std::move(chains);
  const auto directions = regular_direction_report(ws, ctx.opt.r, ctx.opt.base);
  Json levels = Json::array();
  for (const auto& level : directions.levels) levels.push_back(to_json(level));
  rep.results["regular_directions"] = {{"base", directions.base}, {"levels", std::move(levels)}};
  if (search.truncated) rep.warn("chain search stopped at the cutoff");
  rep.check("chains valid",
            std::all_of(search.chains.begin(), search.chains.end(), [&](const Chain& c) { return is_valid_chain(ws, c); }));
  if (const auto* d = ctx.oracle_distances("strong separation oracle")) {
    const auto hs = oracle::halfspaces(ws.graph(), *d);
    bool ok = true;
    for (const Chain& c : search.chains) {
      for (std::size_t i = 0; i + 1 < c.members.size(); ++i) {
        const VertexSet& outer = ws.vertices(c.members[i]);
        const VertexSet& inner = ws.vertices(c.members[i + 1]);
        ok = ok && inner.is_subset_of(outer) && !(inner == outer) &&
             oracle::strongly_separated(hs, ws.vertices(c.members[i].complement()), inner) &&
             oracle::set_distance(*d, ws.vertices(c.members[i].complement()), inner) > static_cast<int>(ctx.opt.r);
      }
    }
    rep.check("chain links oracle", ok);
  }
  ctx.dot_graph = ws.graph();
  if (!search.chains.empty()) ctx.highlights = {{ws.vertices(search.chains.front().members.back()), "gold"}};
}

void cmd_barycenter(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const auto n = ws.order();
  if (ctx.opt.measures.size() > 1) throw Error(ErrorKind::InvalidSpec, "barycenter takes at most one --measure");
  const ProbMeasure mu =
      ctx.opt.measures.empty() ? ProbMeasure::uniform(VertexSet::full(n)) : parse_measure(ctx.opt.measures[0], n);
  ctx.params["measure"] = to_json(mu);
  const auto r = center_of_mass(ws, mu);
  const auto sc = singleton_criterion(ws, mu);
  rep.results["measure"] = to_json(mu);
  rep.results["center"] = to_json(r.center);
  rep.results["singleton"] = r.singleton;
  rep.results["balanced"] = to_json(r.balanced);
  rep.results["majority"] = to_json(r.majority);
  rep.results["singleton_witness"] = sc.witness ? Json::array({sc.witness->first, sc.witness->second}) : Json(nullptr);
  rep.check("singleton criterion", sc.singleton == (r.center.size() == 1));
  rep.check("balanced transversality", balanced_transversality_check(ws, mu).holds);
  if (const auto* d = ctx.oracle_distances("majority and Weber oracles")) {
    rep.check("majority oracle", r.center == oracle::majority_intersection(oracle::halfspaces(ws.graph(), *d), mu));
    rep.check("Weber oracle", r.center == oracle::weber_minimizers(*d, mu));
  }
  ctx.dot_graph = ws.graph();
  ctx.highlights = {{mu.support(), "lightblue"}, {r.center, "gold"}};
}

void cmd_psi(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const auto n = ws.order();
  if (ctx.opt.measures.size() != 2) throw Error(ErrorKind::InvalidSpec, "psi needs exactly two --measure values");
  const ProbMeasure mu1 = parse_measure(ctx.opt.measures[0], n), mu2 = parse_measure(ctx.opt.measures[1], n);
  std::vector<Halfspace> family;
  if (!ctx.opt.family.empty()) {
    const Json j = parse_json(ctx.opt.family);
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "--family must be an array of halfspace ids");
    for (const auto& id : j) {
      if (!id.is_number_unsigned()) throw Error(ErrorKind::ParseError, "halfspace ids are non-negative integers");
      family.push_back(Halfspace::from_id(id.get<std::uint32_t>()));
    }
  } else {
    family = ws.halfspaces();
  }
  ctx.params["measures"] = Json::array({to_json(mu1), to_json(mu2)});
  ctx.params["family"] = ctx.opt.family.empty() ? Json("all") : to_json(family);
  const auto v = psi(ws, mu1, mu2, family);
  rep.results["value"] = to_json(v.value);
  rep.results["argmin"] = v.argmin.id();
  rep.results["argmin_vertices"] = to_json(ws.vertices(v.argmin));
  rep.results["family"] = ctx.params["family"];
  // Independent route: masses summed vertex by vertex over explicit sets.
  std::optional<Rational> best;
  for (Halfspace h : family) {
    const VertexSet& in = ws.vertices(h);
    const VertexSet out = in.complement();
    const Rational value = abs(oracle::mass(mu1, in) - oracle::mass(mu1, out)) +
                           abs(oracle::mass(mu2, in) - oracle::mass(mu2, out));
    if (!best || value < *best) best = value;
  }
  rep.check("psi oracle", best && *best == v.value);
  ctx.dot_graph = ws.graph();
  ctx.highlights = {{ws.vertices(v.argmin), "gold"}};
}

void cmd_centroid(Context& ctx) {
  auto& rep = ctx.report;
  const Wallspace& ws = ctx.walls();
  const Graph& g = ws.graph();
  if (ctx.opt.sets.size() > 1) throw Error(ErrorKind::InvalidSpec, "centroid takes at most one --set");
  const VertexSet k = ctx.opt.sets.empty() ? VertexSet::full(g.order()) : parse_set(ctx.opt.sets[0], g.order());
  ctx.params["sets"] = Json::array({to_json(k)});
  const auto report = centroid_report(ws, k);
  Json depths = Json::array();
  for (const auto& d : report.profile.depths) depths.push_back(Json::array({d[0], d[1]}));
  rep.results["k"] = to_json(k);
  rep.results["hull"] = to_json(report.hull);
  rep.results["depths"] = std::move(depths);
  rep.results["strict"] = to_json(report.strict);
  rep.results["non_strict"] = to_json(report.non_strict);
  rep.results["non_strict_empty"] = report.non_strict_empty;
  rep.results["centroid"] = to_json(report.centroid);
  if (report.non_strict_empty) rep.warn("non-strict majority halfspaces have empty intersection");
  rep.check("nonempty", !report.centroid.empty());
  rep.check("inside hull", report.centroid.is_subset_of(report.hull));
  bool equivariant = true;
  for (const Automorphism& a : enumerate_automorphisms(g, kAutomorphismLimit)) {
    equivariant = equivariant && centroid(ws, apply_automorphism(g, a, k)) == apply_automorphism(g, a, report.centroid);
  }
  rep.check("equivariant", equivariant);
  if (const auto* d = ctx.oracle_distances("convexity and depth oracles")) {
    rep.check("convex oracle", oracle::is_convex(*d, report.centroid));
    bool depth_ok = true;
    for (WallId w = 0; w < ws.wall_count(); ++w) {
      for (std::uint8_t side : {0, 1}) {
        depth_ok = depth_ok &&
                   static_cast<int>(report.profile.depths[w][side]) == oracle::depth(*d, k, ws.wall(w).sides[side]);
      }
    }
    rep.check("depth oracle", depth_ok);
    if (k == VertexSet::full(g.order())) {
      rep.check("inside eccentricity minimizers", report.centroid.is_subset_of(oracle::eccentricity_minimizers(*d, k, k)));
    }
  }
  ctx.dot_graph = g;
  ctx.highlights = {{k, "lightblue"}, {report.centroid, "gold"}};
}

void cmd_dualize(Context& ctx) {
  auto& rep = ctx.report;
  if (!ctx.input) throw Error(ErrorKind::InvalidSpec, "dualize needs --input or --generator");
  std::optional<Pocset> p;
  const Graph* original = nullptr;
  if (const auto* q = std::get_if<Pocset>(&*ctx.input)) {
    p = *q;
  } else {
    original = &ctx.graph();
    p = pocset_of(ctx.walls());
  }
  const auto dual = dual_median_graph(*p);
  rep.results["elements"] = p->size();
  rep.results["walls"] = p->wall_count();
  rep.results["vertices"] = dual.graph.order();
  rep.results["edges"] = dual.graph.edges().size();
  rep.results["graph"] = to_json(dual.graph);
  rep.check("dual is median", is_median_graph(dual.graph).is_median);
  if (original) {
    rep.check("embedding is an isomorphism", is_isomorphism(*original, dual.graph, embed_into_dual(ctx.walls(), dual)));
    if (original->order() <= kIsomorphismOracle) {
      rep.check("isomorphism oracle", oracle::isomorphic(*original, dual.graph));
    } else {
      rep.skip("isomorphism oracle",
               std::to_string(original->order()) + " vertices > " + std::to_string(kIsomorphismOracle));
    }
  }
  ctx.dot_graph = dual.graph;
}

void cmd_sweep(Context& ctx) {
  ctx.params["suite"] = ctx.opt.suite;
  std::vector<SweepInstance> corpus;
  if (ctx.input) {
    corpus.push_back({ctx.label, *ctx.input, false});
  } else {
    corpus = default_sweep_corpus();
  }
  Report swept = sweep(corpus, ctx.opt.suite, ctx.opt.workers);
  ctx.report.results = std::move(swept.results);
  ctx.report.checks = std::move(swept.checks);
}

const std::map<std::string, void (*)(Context&)>& commands() {
  static const std::map<std::string, void (*)(Context&)> table{
      {"validate", cmd_validate}, {"walls", cmd_walls},           {"rank", cmd_rank},   {"factors", cmd_factors},
      {"separate", cmd_separate}, {"hull", cmd_hull},             {"core", cmd_core},   {"chains", cmd_chains},
      {"barycenter", cmd_barycenter}, {"psi", cmd_psi},           {"centroid", cmd_centroid},
      {"dualize", cmd_dualize},   {"sweep", cmd_sweep},
  };
  return table;
}

void load_input(Context& ctx) {
  const Options& opt = ctx.opt;
  if (!opt.input.empty() && !opt.generator.empty()) {
    throw Error(ErrorKind::InvalidSpec, "give either --input or --generator, not both");
  }
  if (!opt.input.empty()) {
    ctx.input = input_from_json(read_json_file(opt.input));
    ctx.label = opt.input;
  } else if (!opt.generator.empty()) {
    const std::vector<std::string> assignments(opt.generator.begin() + 1, opt.generator.end());
    const auto spec = make_spec(opt.generator.front(), assignments, opt.seed.value_or(0));
    ctx.input = generate(spec);
    ctx.label = spec.label();
  } else {
    ctx.label = opt.command == "sweep" ? "default corpus" : "none";
    return;
  }
  // Emitting and re-reading the input must reproduce it exactly.
  const std::string emitted = to_json(*ctx.input).dump();
  const std::string again = to_json(input_from_json(parse_json(emitted))).dump();
  ctx.report.check("input round trip", emitted == again);
}

int execute(const Options& opt, Outcome& outcome) {
  const auto start = std::chrono::steady_clock::now();
  const auto& table = commands();
  const auto it = table.find(opt.command);
  if (it == table.end()) throw Error(ErrorKind::UnknownCommand, "no command named '" + opt.command + "'");

  Context ctx{opt};
  ctx.report.command = opt.command;
  load_input(ctx);
  it->second(ctx);
  Report& rep = ctx.report;
  rep.input = ctx.label;
  const std::string canonical = ctx.input ? to_json(*ctx.input).dump() : ctx.label;
  rep.digest = fnv1a_hex(opt.command + "\n" + canonical + "\n" + ctx.params.dump());
  if (opt.timing) {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  const std::string text = opt.format == "text" ? rep.to_text() : rep.to_json().dump(2) + "\n";
  if (!opt.dot.empty()) {
    if (!ctx.dot_graph) throw Error(ErrorKind::InvalidSpec, opt.command + " has no graph to draw");
    write_text_file(opt.dot, to_dot(*ctx.dot_graph, ctx.highlights, "medkit"));
  }
  if (!opt.out.empty()) {
    write_text_file(opt.out, text);
  } else {
    outcome.out = text;
  }
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : commands()) names.push_back(name);
  return names;
}

Outcome run(const std::vector<std::string>& args) {
  Outcome outcome;
  Options opt;
  CLI::App app{"Median graph toolkit: walls, rank, factors, barycenters, centroids, chains and sweeps", "medkit"};
  app.add_option("command", opt.command, "Command to run")->required();
  app.add_option("--input", opt.input, "Graph or pocset file");
  app.add_option("--generator", opt.generator, "Generator name followed by k=v parameters")->expected(1, -1);
  app.add_option("--seed", opt.seed, "Seed for seeded generators");
  app.add_option("--suite", opt.suite, "Sweep suite");
  app.add_option("--out", opt.out, "Write the report to FILE");
  app.add_option("--dot", opt.dot, "Write a DOT drawing to FILE");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--set", opt.sets, "Vertex set: JSON array, 'all', or a file (repeatable)")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--measure", opt.measures, "Measure: 'v:p/q,...', JSON array, or a file (repeatable)")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--family", opt.family, "Halfspace ids for psi, as a JSON array")->allow_extra_args(false);
  app.add_option("--r", opt.r, "Chain spacing");
  app.add_option("--length", opt.length, "Chain length");
  app.add_option("--base", opt.base, "Base vertex for regular directions");
  app.add_option("--workers", opt.workers, "Sweep worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", opt.timing, "Include wall-clock seconds in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.err = std::string("medkit: ParseError: ") + e.what() + "\n";
    outcome.exit_code = kExitInputError;
    return outcome;
  }
  try {
    outcome.exit_code = execute(opt, outcome);
  } catch (const Error& e) {
    outcome.err = std::string("medkit: ") + e.what() + "\n";
    outcome.exit_code = kExitInputError;
  } catch (const std::exception& e) {
    outcome.err = std::string("medkit: ParseError: ") + e.what() + "\n";
    outcome.exit_code = kExitInputError;
  }
  return outcome;
}

}  // namespace medkit::cli
