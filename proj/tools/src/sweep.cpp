#include "medkit/cli/sweep.hpp"

#include "generators.hpp"
#include "medkit/barycenter.hpp"
#include "medkit/centroid.hpp"
#include "medkit/chains.hpp"
#include "medkit/error.hpp"
#include "medkit/factors.hpp"
#include "medkit/io.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace medkit::cli {

namespace {

// Brute-force oracle limits, in vertices.
constexpr std::size_t kPairOracle = 200;   // BFS distance matrix and O(n^2)-per-query oracles
constexpr std::size_t kTripleOracle = 64;  // all-triples median enumeration
constexpr std::size_t kGateExhaustive = 100;
constexpr std::size_t kIsomorphismOracle = 1024;
constexpr std::size_t kMaxTripleWalls = 32;
constexpr std::size_t kMaxCounterexamples = 5;

class Tally {
 public:
  explicit Tally(std::string label) : label_(std::move(label)) {}

  void check(bool ok, const std::function<std::string()>& what) {
    ++out_.checks;
    if (ok) return;
    ++out_.failures;
    if (out_.counterexamples.size() < kMaxCounterexamples) out_.counterexamples.push_back(label_ + ": " + what());
  }
  void skip(const std::string& oracle, std::size_t size, std::size_t limit, const char* unit = "vertices") {
    out_.skipped.push_back(label_ + ": " + oracle + " (" + std::to_string(size) + " " + unit + " > " +
                           std::to_string(limit) + ")");
  }
  void skip(const std::string& oracle, const std::string& reason) {
    out_.skipped.push_back(label_ + ": " + oracle + " (" + reason + ")");
  }
  void note(std::string s) { out_.notes.push_back(std::move(s)); }
  SuiteOutcome take() { return std::move(out_); }

 private:
  std::string label_;
  SuiteOutcome out_;
};

Graph graph_of(const SweepInstance& inst) {
  if (const auto* p = std::get_if<Pocset>(&inst.input)) return dual_median_graph(*p).graph;
  return std::get<Graph>(inst.input);
}

std::string ids(std::initializer_list<Vertex> vs) {
  std::string s = "(";
  for (Vertex v : vs) s += (s.size() > 1 ? ", " : "") + std::to_string(v);
  return s + ")";
}

void crofton(Tally& t, const SweepInstance& inst, oracle::Rng&) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  const auto n = g.order();
  if (n > kPairOracle) return t.skip("BFS distance oracle", n, kPairOracle);
  Wallspace ws(g);
  const auto d = oracle::distances(g);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const auto between = halfspaces_between(ws, VertexSet::singleton(n, x), VertexSet::singleton(n, y));
      t.check(static_cast<int>(between.size()) == d[x][y],
              [&] { return "|H(x,y)| != d(x,y) at " + ids({x, y}); });
    }
  }
}

void median_axioms(Tally& t, const SweepInstance& inst, oracle::Rng& rng) {
  const Graph g = graph_of(inst);
  const auto n = g.order();
  const auto verdict = is_median_graph(g);
  if (n <= kTripleOracle) {
    t.check(verdict.is_median == oracle::is_median_graph(oracle::distances(g)),
            [] { return std::string("validator disagrees with the all-triples oracle"); });
  } else {
    t.skip("all-triples median oracle", n, kTripleOracle);
  }
  if (inst.negative_control) {
    t.check(!verdict.is_median && verdict.witness.has_value(),
            [] { return std::string("negative control accepted"); });
    return;
  }
  t.check(verdict.is_median, [&] {
    const auto& w = *verdict.witness;
    return "rejected at triple " + ids({w[0], w[1], w[2]});
  });
  if (!verdict.is_median) return;
  Wallspace ws(g);
  const bool with_oracle = n <= kPairOracle;
  const auto d = with_oracle ? oracle::distances(g) : oracle::Matrix{};
  if (!with_oracle) t.skip("median enumeration oracle", n, kPairOracle);
  for (int i = 0; i < 500; ++i) {
    const Vertex x = rng.below(n), y = rng.below(n), z = rng.below(n), u = rng.below(n), v = rng.below(n);
    const Vertex m = median(g, x, y, z);
    auto at = [&] { return ids({x, y, z}); };
    t.check(median(g, y, x, z) == m && median(g, z, y, x) == m, [&] { return "median not symmetric at " + at(); });
    t.check(median(g, x, x, y) == x, [&] { return "majority law fails at " + ids({x, y}); });
    t.check(median(g, m, u, v) == median(g, x, median(g, y, u, v), median(g, z, u, v)),
            [&] { return "distributivity fails at " + ids({x, y, z, u, v}); });
    t.check(ws.median(x, y, z) == m, [&] { return "signature median differs at " + at(); });
    if (with_oracle) {
      t.check(oracle::medians(d, x, y, z) == std::vector<Vertex>{m}, [&] { return "oracle median differs at " + at(); });
    }
  }
}

void deep_triple_constancy(Tally& t, const SweepInstance& inst, oracle::Rng&) {
  if (inst.negative_control) return;
  Wallspace ws(graph_of(inst));
  if (ws.wall_count() > kMaxTripleWalls) {
    return t.skip("separated triple enumeration", ws.wall_count(), kMaxTripleWalls, "walls");
  }
  const auto triples = separated_triples(ws);
  for (const auto& tri : triples) {
    bool constant = true;
    try {
      (void)deep_triple_median(ws, tri);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConstant) throw;
      constant = false;
    }
    t.check(constant, [&] {
      const auto& h = tri.halfspaces;
      return "median not constant on triple " + ids({h[0].id(), h[1].id(), h[2].id()});
    });
  }
  t.note(std::to_string(triples.size()) + " separated triples");
}

void barycenter_oracle(Tally& t, const SweepInstance& inst, oracle::Rng& rng) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  const auto n = g.order();
  if (n > kPairOracle) return t.skip("majority and Weber oracles", n, kPairOracle);
  Wallspace ws(g);
  const auto d = oracle::distances(g);
  const auto hs = oracle::halfspaces(g, d);
  for (int trial = 0; trial < 100; ++trial) {
    auto mu = rng.measure(n, 6);
    // Every fourth measure is a balanced split to exercise ties.
    if (trial % 4 == 0 && n > 1) {
      const auto v = static_cast<Vertex>(rng.below(n));
      const auto w = static_cast<Vertex>((v + 1 + rng.below(n - 1)) % n);
      mu = ProbMeasure::make(n, {{v, Rational(1, 2)}, {w, Rational(1, 2)}});
    }
    const auto r = center_of_mass(ws, mu);
    const std::string at = "trial " + std::to_string(trial);
    t.check(r.center == oracle::majority_intersection(hs, mu), [&] { return "center != majority oracle, " + at; });
    t.check(r.center == oracle::weber_minimizers(d, mu), [&] { return "center != Weber minimizers, " + at; });
    t.check(oracle::is_convex(d, r.center), [&] { return "center not convex, " + at; });
    t.check(singleton_criterion(ws, mu).singleton == (r.center.size() == 1),
            [&] { return "singleton criterion disagrees, " + at; });
    t.check(balanced_transversality_check(ws, mu).holds, [&] { return "unbalanced separating wall, " + at; });
  }
}

void separation_helly(Tally& t, const SweepInstance& inst, oracle::Rng& rng) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  Wallspace ws(g);
  for (int trial = 0; trial < 500; ++trial) {
    const VertexSet a = oracle::random_convex(rng, ws);
    const VertexSet b = oracle::random_convex(rng, ws);
    const VertexSet c = oracle::random_convex(rng, ws);
    if (!a.intersects(b)) {
      const Halfspace h = separate(ws, a, b);
      t.check(b.is_subset_of(ws.vertices(h)) && !a.intersects(ws.vertices(h)),
              [&] { return "separate returned halfspace " + std::to_string(h.id()) + " that does not separate"; });
    }
    const std::vector<VertexSet> sets{a, b, c};
    const auto w = helly_witness(g, sets);
    if (a.intersects(b) && a.intersects(c) && b.intersects(c)) {
      t.check(w.common && a.contains(*w.common) && b.contains(*w.common) && c.contains(*w.common),
              [] { return std::string("pairwise intersecting convex sets without a reported common vertex"); });
    } else {
      t.check(!w.common && w.disjoint_pair.has_value(), [] { return std::string("disjoint pair not reported"); });
    }
  }
}

void gate_laws(Tally& t, const SweepInstance& inst, oracle::Rng& rng) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  const auto n = g.order();
  Wallspace ws(g);
  if (n <= kGateExhaustive) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a; b < n; ++b) {
        Gate onto(g, interval(g, a, b));
        for (Vertex x = 0; x < n; ++x) {
          t.check(onto(x) == median(g, a, b, x), [&] { return "interval gate != median at " + ids({a, b, x}); });
        }
      }
    }
  } else {
    t.skip("exhaustive interval gates", n, kGateExhaustive);
  }
  for (int trial = 0; trial < 20; ++trial) {
    Gate pi(g, oracle::random_convex(rng, ws));
    std::vector<Vertex> image(n);
    for (Vertex x = 0; x < n; ++x) image[x] = pi(x);
    for (Vertex x = 0; x < n; ++x) {
      t.check(pi.target().contains(image[x]), [&] { return "gate left the target at " + ids({x}); });
      for (Vertex y = x + 1; y < n; ++y) {
        t.check(g.distance(image[x], image[y]) <= g.distance(x, y),
                [&] { return "gate not 1-Lipschitz at " + ids({x, y}); });
      }
    }
  }
  int pairs = 0;
  for (int attempts = 0; pairs < 200 && attempts < 20'000; ++attempts) {
    const VertexSet a = oracle::random_convex(rng, ws), b = oracle::random_convex(rng, ws);
    if (!a.intersects(b)) continue;
    ++pairs;
    const auto img = gate_image(g, a, b);
    t.check(img.intersecting && img.image == (a & b), [] { return std::string("gate image differs from C ∩ C'"); });
  }
}

void duality(Tally& t, const SweepInstance& inst, oracle::Rng&) {
  if (inst.negative_control) return;
  if (const auto* p = std::get_if<Pocset>(&inst.input)) {
    const auto dual = dual_median_graph(*p);
    t.check(is_median_graph(dual.graph).is_median, [] { return std::string("dual is not a median graph"); });
    Wallspace ws(dual.graph);
    t.check(ws.wall_count() == p->wall_count(), [&] {
      return "dual has " + std::to_string(ws.wall_count()) + " walls, pocset has " + std::to_string(p->wall_count());
    });
    t.note("dual has " + std::to_string(dual.graph.order()) + " vertices");
    return;
  }
  const Graph& g = std::get<Graph>(inst.input);
  Wallspace ws(g);
  std::optional<DualGraph> built;
  try {
    built = dual_median_graph(pocset_of(ws));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimit) throw;
    return t.skip("pocset dual round trip", e.what());
  }
  const auto& dual = *built;
  const auto map = embed_into_dual(ws, dual);
  t.check(is_isomorphism(g, dual.graph, map), [] { return std::string("embedding into the dual is not an isomorphism"); });
  if (g.order() <= kIsomorphismOracle) {
    t.check(oracle::isomorphic(g, dual.graph), [] { return std::string("dual not isomorphic (Boost.Graph oracle)"); });
  } else {
    t.skip("isomorphism oracle", g.order(), kIsomorphismOracle);
  }
}

void rank_factors(Tally& t, const SweepInstance& inst, oracle::Rng&) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  Wallspace ws(g);
  const std::size_t r = rank(ws);
  const auto family = maximum_transverse_family(ws);
  t.check(family.size() == r, [&] { return "family size " + std::to_string(family.size()) + " != rank"; });
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      t.check(oracle::transverse(ws.wall(family[i]).sides[0], ws.wall(family[j]).sides[0]),
              [&] { return "walls " + ids({family[i], family[j]}) + " not transverse"; });
    }
  }
  const auto f = irreducible_factors(ws);
  t.check(verify_reconstruction(g, f), [] { return std::string("factor reconstruction failed"); });
  std::size_t rank_sum = 0;
  for (const Graph& factor : f.factors) {
    Wallspace fw(factor);
    rank_sum += rank(fw);
    t.check(irreducible_factors(fw).factors.size() == 1, [] { return std::string("factor is reducible"); });
  }
  t.check(rank_sum == r, [&] { return "factor ranks sum to " + std::to_string(rank_sum) + ", rank is " + std::to_string(r); });
  if (g.order() <= kIsomorphismOracle) {
    t.check(oracle::isomorphic(product_of(f), g), [] { return std::string("product of factors not isomorphic"); });
  } else {
    t.skip("isomorphism oracle", g.order(), kIsomorphismOracle);
  }
  t.note("rank " + std::to_string(r) + ", " + std::to_string(f.factors.size()) + " factors");
}

void psi_bound(Tally& t, const SweepInstance& inst, oracle::Rng& rng) {
  if (inst.negative_control) return;
  Wallspace ws(graph_of(inst));
  std::vector<std::pair<Halfspace, Halfspace>> pairs;
  for (Halfspace a : ws.halfspaces()) {
    for (Halfspace b : ws.halfspaces()) {
      if (a != b && ws.disjoint(a, b) && ws.strongly_separated(a, b)) pairs.emplace_back(a, b);
    }
  }
  if (pairs.empty()) {
    t.note("no strongly separated pair");
    return;
  }
  for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto [h1, h2] = pairs[rng.below(pairs.size())];
      const auto mu1 = oracle::concentrated(rng, ws, h1, eps), mu2 = oracle::concentrated(rng, ws, h2, eps);
      t.check(ev(ws, mu1, h1) > 1 - eps && ev(ws, mu2, h2) > 1 - eps,
              [] { return std::string("generator produced an unconcentrated measure"); });
      const auto value = psi(ws, mu1, mu2).value;
      t.check(value > 1 - 2 * eps, [&] {
        return "psi = " + medkit::to_string(value) + " on pair " + ids({h1.id(), h2.id()}) + " at eps = " + medkit::to_string(eps);
      });
    }
  }
  t.note(std::to_string(pairs.size()) + " strongly separated pairs");
}

void centroid_suite(Tally& t, const SweepInstance& inst, oracle::Rng& rng) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  const auto n = g.order();
  Wallspace ws(g);
  const bool with_oracle = n <= kPairOracle;
  const auto d = with_oracle ? oracle::distances(g) : oracle::Matrix{};
  if (!with_oracle) t.skip("convexity, depth and eccentricity oracles", n, kPairOracle);
  const auto autos = enumerate_automorphisms(g, 256);
  if (with_oracle) {
    const VertexSet all = VertexSet::full(n);
    t.check(centroid(ws, all).is_subset_of(oracle::eccentricity_minimizers(d, all, all)),
            [] { return std::string("centroid of all vertices outside the eccentricity minimizers"); });
  }
  for (int trial = 0; trial < 40; ++trial) {
    const VertexSet k = rng.subset(n, 8);
    const auto report = centroid_report(ws, k);
    const std::string at = "trial " + std::to_string(trial);
    t.check(!report.centroid.empty(), [&] { return "empty centroid, " + at; });
    t.check(report.centroid.is_subset_of(report.hull), [&] { return "centroid outside the hull, " + at; });
    const Automorphism& a = autos[rng.below(autos.size())];
    t.check(centroid(ws, apply_automorphism(g, a, k)) == apply_automorphism(g, a, report.centroid),
            [&] { return "centroid not equivariant, " + at; });
    if (!with_oracle) continue;
    t.check(oracle::is_convex(d, report.centroid), [&] { return "centroid not convex, " + at; });
    for (WallId w = 0; w < ws.wall_count(); ++w) {
      for (std::uint8_t side : {0, 1}) {
        t.check(static_cast<int>(report.profile.depths[w][side]) == oracle::depth(d, k, ws.wall(w).sides[side]),
                [&] { return "depth of wall " + std::to_string(w) + " differs from oracle, " + at; });
      }
    }
  }
}

void core_suite(Tally& t, const SweepInstance& inst, oracle::Rng&) {
  if (inst.negative_control) return;
  const Graph g = graph_of(inst);
  Wallspace ws(g);
  if (ws.wall_count() > kMaxTripleWalls) {
    return t.skip("median core", ws.wall_count(), kMaxTripleWalls, "walls");
  }
  const auto core = median_core(ws);
  t.check(median_hull(g, core.core) == core.core, [] { return std::string("core not median-closed"); });
  t.check(core.seeds.is_subset_of(core.core), [] { return std::string("seed outside the core"); });
  t.check(core.no_regular_directions == (core.triples == 0),
          [] { return std::string("no-regular-directions flag disagrees with the triple count"); });
  for (const Automorphism& a : enumerate_automorphisms(g, 256)) {
    t.check(apply_automorphism(g, a, core.core) == core.core, [] { return std::string("core moved by an automorphism"); });
  }
  t.note(std::to_string(core.core.size()) + " core vertices from " + std::to_string(core.triples) + " triples (" +
         std::to_string(core.non_constant_triples) + " not constant)");
}

using SuiteFn = void (*)(Tally&, const SweepInstance&, oracle::Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"crofton", crofton},
      {"median-axioms", median_axioms},
      {"deep-triple-constancy", deep_triple_constancy},
      {"barycenter-oracle", barycenter_oracle},
      {"separation-helly", separation_helly},
      {"gate-laws", gate_laws},
      {"duality", duality},
      {"rank-factors", rank_factors},
      {"psi-bound", psi_bound},
      {"centroid", centroid_suite},
      {"core", core_suite},
  };
  return table;
}

}  // namespace

std::vector<SweepInstance> default_sweep_corpus() {
  std::vector<SweepInstance> out;
  for (const auto& entry : default_corpus()) {
    out.push_back({entry.spec.label(), generate(entry.spec), entry.negative_control});
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

SuiteOutcome run_suite(const std::string& suite, const SweepInstance& instance) {
  const auto& table = suites();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == suite; });
  if (it == table.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + suite + "'");
  Tally tally(instance.label);
  oracle::Rng rng(fnv1a(suite + "|" + instance.label));
  try {
    it->second(tally, instance, rng);
  } catch (const std::exception& e) {
    tally.check(false, [&] { return std::string("error: ") + e.what(); });
  }
  return tally.take();
}

Report sweep(const std::vector<SweepInstance>& corpus, const std::string& suite, unsigned workers) {
  std::vector<std::string> selected;
  if (suite == "all") {
    for (const auto& [name, fn] : suites()) selected.push_back(name);
  } else {
    const auto& table = suites();
    if (std::none_of(table.begin(), table.end(), [&](const auto& e) { return e.first == suite; })) {
      throw Error(ErrorKind::UnknownSuite, "no suite named '" + suite + "'");
    }
    selected.push_back(suite);
  }

  // One job per (instance, suite); slots are filled by index so the merge
  // below sees the same order regardless of which worker ran what.
  const std::size_t jobs = corpus.size() * selected.size();
  std::vector<SuiteOutcome> outcomes(jobs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      outcomes[j] = run_suite(selected[j % selected.size()], corpus[j / selected.size()]);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(jobs)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  pool.clear();

  Report report;
  report.command = "sweep";
  report.results["suite"] = suite;
  report.results["instances"] = corpus.size();
  Json per_suite = Json::array();
  for (std::size_t s = 0; s < selected.size(); ++s) {
    std::size_t checks = 0, failures = 0;
    Json counterexamples = Json::array(), skipped = Json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& o = outcomes[i * selected.size() + s];
      checks += o.checks;
      failures += o.failures;
      for (const auto& c : o.counterexamples) {
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
      }
      for (const auto& k : o.skipped) skipped.push_back(k);
    }
    Json entry;
    entry["name"] = selected[s];
    entry["checks"] = checks;
    entry["failures"] = failures;
    entry["counterexamples"] = std::move(counterexamples);
    entry["oracles_skipped"] = std::move(skipped);
    per_suite.push_back(std::move(entry));
    report.check(selected[s], failures == 0,
                 std::to_string(checks) + " checks, " + std::to_string(failures) + " failures");
    for (const auto& k : per_suite.back()["oracles_skipped"]) report.skip(selected[s], k.get<std::string>());
  }
  report.results["suites"] = std::move(per_suite);
  Json per_instance = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Json entry;
    entry["label"] = corpus[i].label;
    entry["negative_control"] = corpus[i].negative_control;
    Json by_suite = Json::object();
    for (std::size_t s = 0; s < selected.size(); ++s) {
      const auto& o = outcomes[i * selected.size() + s];
      Json r;
      r["checks"] = o.checks;
      r["failures"] = o.failures;
      if (!o.notes.empty()) r["notes"] = o.notes;
      by_suite[selected[s]] = std::move(r);
    }
    entry["suites"] = std::move(by_suite);
    per_instance.push_back(std::move(entry));
  }
  report.results["per_instance"] = std::move(per_instance);
  return report;
}

}  // namespace medkit::cli
