// Randomized and exhaustive invariant checks over small corpus graphs.

#include "medkit/barycenter.hpp"
#include "medkit/chains.hpp"
#include "medkit/corpus.hpp"
#include "medkit/factors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace medkit;

namespace {

std::vector<Graph> small_graphs() {
  return {path_graph(6),     hypercube(3),      grid_graph(3, 3), random_tree(14, 8),
          spider(3, 2),      staircase(2),      cartesian_product(spider(3, 1), path_graph(3)),
          dual_median_graph(random_pocset(7, 0.3, 21)).graph};
}

/// Random convex set: an interval, a halfspace intersection, or a hull.
VertexSet random_convex(oracle::Rng& rng, const Wallspace& ws) {
  const Graph& g = ws.graph();
  switch (rng.below(3)) {
    case 0:
      return interval(g, rng.below(g.order()), rng.below(g.order()));
    case 1: {
      VertexSet s = VertexSet::full(g.order());
      for (int i = 0; i < 3 && ws.wall_count() > 0; ++i) {
        Halfspace h = Halfspace::from_id(rng.below(ws.halfspace_count()));
        if ((s & ws.vertices(h)).empty()) break;
        s &= ws.vertices(h);
      }
      return s;
    }
    default:
      return convex_hull(g, rng.subset(g.order(), 3));
  }
}

}  // namespace

TEST_CASE("median validator agrees with brute force") {
  std::vector<Graph> graphs = small_graphs();
  graphs.push_back(cycle_graph(6));
  graphs.push_back(complete_bipartite(2, 3));
  graphs.push_back(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}}));
  for (const Graph& g : graphs) CHECK(is_median_graph(g).is_median == oracle::is_median_graph(oracle::distances(g)));
}

TEST_CASE("median algebra axioms") {
  oracle::Rng rng(1);
  for (const Graph& g : small_graphs()) {
    const Vertex n = g.order();
    const auto d = oracle::distances(g);
    for (int i = 0; i < 400; ++i) {
      Vertex x = rng.below(n), y = rng.below(n), z = rng.below(n), t = rng.below(n), w = rng.below(n);
      const Vertex m = median(g, x, y, z);
      CHECK(oracle::medians(d, x, y, z) == std::vector<Vertex>{m});
      CHECK(median(g, x, x, y) == x);
      CHECK(median(g, y, x, z) == m);
      CHECK(median(g, z, y, x) == m);
      CHECK(median(g, m, t, w) == median(g, x, median(g, y, t, w), median(g, z, t, w)));
      CHECK(median(g, x, y, z) == Wallspace(g).median(x, y, z));
    }
  }
}

TEST_CASE("intervals are convex fixed-point sets") {
  for (const Graph& g : small_graphs()) {
    const auto d = oracle::distances(g);
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = a; b < g.order(); ++b) {
        const VertexSet iv = interval(g, a, b);
        CHECK(iv.to_vector() == oracle::interval(d, a, b));
        VertexSet fixed(g.order());
        for (Vertex x = 0; x < g.order(); ++x) {
          if (median(g, a, b, x) == x) fixed.insert(x);
        }
        CHECK(fixed == iv);
        CHECK(is_convex(g, iv));
      }
    }
  }
}

TEST_CASE("gate laws") {
  oracle::Rng rng(2);
  for (const Graph& g : small_graphs()) {
    Wallspace ws(g);
    for (int trial = 0; trial < 20; ++trial) {
      const VertexSet c = random_convex(rng, ws);
      Gate pi(g, c);
      for (Vertex x = 0; x < g.order(); ++x) {
        const Vertex p = pi(x);
        CHECK(c.contains(p));
        for (Vertex cc : c) CHECK(g.distance(x, cc) == g.distance(x, p) + g.distance(p, cc));
        for (Vertex y = 0; y < g.order(); ++y) CHECK(g.distance(p, pi(y)) <= g.distance(x, y));
      }
      const VertexSet other = random_convex(rng, ws);
      auto img = gate_image(g, c, other);
      if (c.intersects(other)) CHECK(img.image == (c & other));
      CHECK(img.intersecting == c.intersects(other));
    }
    const Vertex a = rng.below(g.order()), b = rng.below(g.order());
    Gate onto(g, interval(g, a, b));
    for (Vertex x = 0; x < g.order(); ++x) CHECK(onto(x) == median(g, a, b, x));
  }
}

TEST_CASE("hulls") {
  oracle::Rng rng(3);
  for (const Graph& g : small_graphs()) {
    const auto d = oracle::distances(g);
    const auto hs = oracle::halfspaces(g, d);
    for (int trial = 0; trial < 30; ++trial) {
      const VertexSet s = rng.subset(g.order(), 4);
      const VertexSet hull = convex_hull(g, s);
      CHECK(hull == oracle::hull_by_halfspaces(hs, s));
      CHECK(convex_hull(g, hull) == hull);
      const VertexSet mh = median_hull(g, s);
      CHECK(median_hull(g, mh) == mh);
      CHECK(mh.is_subset_of(hull));
      CHECK(s.is_subset_of(mh));
      VertexSet bigger = s;
      bigger.insert(rng.below(g.order()));
      CHECK(hull.is_subset_of(convex_hull(g, bigger)));
      CHECK(mh.is_subset_of(median_hull(g, bigger)));
    }
  }
}

TEST_CASE("equivariance of medians and hulls") {
  oracle::Rng rng(4);
  for (const Graph& g : small_graphs()) {
    const auto autos = enumerate_automorphisms(g, 32);
    for (const Automorphism& a : autos) {
      for (int i = 0; i < 20; ++i) {
        Vertex x = rng.below(g.order()), y = rng.below(g.order()), z = rng.below(g.order());
        CHECK(median(g, a(x), a(y), a(z)) == a(median(g, x, y, z)));
        const VertexSet s = rng.subset(g.order(), 3);
        CHECK(convex_hull(g, apply_automorphism(g, a, s)) == apply_automorphism(g, a, convex_hull(g, s)));
      }
    }
  }
}

TEST_CASE("walls: Crofton count, convex sides, edge cuts") {
  for (const Graph& g : small_graphs()) {
    Wallspace ws(g);
    const auto d = oracle::distances(g);
    CHECK(oracle::halfspaces(g, d).size() == ws.halfspace_count());
    for (Vertex x = 0; x < g.order(); ++x) {
      for (Vertex y = 0; y < g.order(); ++y) {
        CHECK(halfspaces_between(ws, VertexSet::singleton(g.order(), x), VertexSet::singleton(g.order(), y)).size() ==
              static_cast<std::size_t>(d[x][y]));
      }
    }
    std::size_t edges = 0;
    for (const Wall& w : ws.walls()) {
      CHECK(oracle::is_convex(d, w.sides[0]));
      CHECK(oracle::is_convex(d, w.sides[1]));
      CHECK((w.sides[0] | w.sides[1]) == VertexSet::full(g.order()));
      for (Edge e : w.edges) CHECK(w.sides[0].contains(e.u) != w.sides[0].contains(e.v));
      edges += w.edges.size();
    }
    CHECK(edges == g.edges().size());
  }
}

TEST_CASE("strong separation matches the brute-force definition") {
  for (const Graph& g : small_graphs()) {
    Wallspace ws(g);
    const auto d = oracle::distances(g);
    const auto hs = oracle::halfspaces(g, d);
    const bool tree = rank(ws) == 1;
    for (Halfspace a : ws.halfspaces()) {
      for (Halfspace b : ws.halfspaces()) {
        if (!ws.disjoint(a, b)) continue;
        const bool ss = ws.strongly_separated(a, b);
        CHECK(ss == oracle::strongly_separated(hs, ws.vertices(a), ws.vertices(b)));
        CHECK(ss == ws.strongly_separated(b, a));
        if (tree) CHECK(ss);
      }
    }
  }
}

TEST_CASE("products: rank is additive and no strong separation crosses factors") {
  const std::vector<Graph> parts{path_graph(3), spider(3, 1), hypercube(2), staircase(1)};
  for (const Graph& a : parts) {
    for (const Graph& b : parts) {
      const Graph prod = cartesian_product(a, b);
      Wallspace ws(prod);
      CHECK(rank(ws) == rank(Wallspace(a)) + rank(Wallspace(b)));
      auto f = irreducible_factors(ws);
      CHECK(verify_reconstruction(prod, f));
      CHECK(oracle::isomorphic(product_of(f), prod));
      for (const Graph& factor : f.factors) CHECK(irreducible_factors(Wallspace(factor)).factors.size() == 1);
      for (Halfspace x : ws.halfspaces()) {
        for (Halfspace y : ws.halfspaces()) {
          if (ws.disjoint(x, y)) CHECK_FALSE(ws.strongly_separated(x, y));
        }
      }
      CHECK(median_core(ws).core.empty());
    }
  }
}

TEST_CASE("separation and Helly on random convex sets") {
  oracle::Rng rng(6);
  for (const Graph& g : small_graphs()) {
    Wallspace ws(g);
    for (int trial = 0; trial < 200; ++trial) {
      const VertexSet a = random_convex(rng, ws), b = random_convex(rng, ws);
      if (!a.intersects(b)) {
        Halfspace h = separate(ws, a, b);
        CHECK(b.is_subset_of(ws.vertices(h)));
        CHECK_FALSE(a.intersects(ws.vertices(h)));
      }
      std::vector<VertexSet> sets{a, b, random_convex(rng, ws), random_convex(rng, ws)};
      bool pairwise = true;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) pairwise = pairwise && sets[i].intersects(sets[j]);
      }
      auto w = helly_witness(g, sets);
      CHECK(w.common.has_value() == pairwise);
      if (w.common) {
        for (const auto& s : sets) CHECK(s.contains(*w.common));
      }
    }
  }
}

TEST_CASE("median core is median-closed and automorphism-invariant") {
  for (const Graph& g : {spider(4, 2), staircase(3), random_tree(16, 12)}) {
    Wallspace ws(g);
    const auto core = median_core(ws).core;
    REQUIRE_FALSE(core.empty());
    CHECK(median_hull(g, core) == core);
    for (const Automorphism& a : enumerate_automorphisms(g, 64)) CHECK(apply_automorphism(g, a, core) == core);
  }
}

TEST_CASE("barycenter and psi are equivariant") {
  oracle::Rng rng(8);
  for (const Graph& g : small_graphs()) {
    Wallspace ws(g);
    const auto autos = enumerate_automorphisms(g, 16);
    for (int trial = 0; trial < 20; ++trial) {
      const Automorphism& a = autos[rng.below(autos.size())];
      auto mu1 = rng.measure(g.order(), 5), mu2 = rng.measure(g.order(), 5);
      auto moved1 = pushforward(g, mu1, a), moved2 = pushforward(g, mu2, a);
      CHECK(center_of_mass(ws, moved1).center == apply_automorphism(g, a, center_of_mass(ws, mu1).center));
      CHECK(psi(ws, moved1, moved2).value == psi(ws, mu1, mu2).value);
      std::vector<Halfspace> family, image_family;
      for (Halfspace h : ws.halfspaces()) {
        if (rng.coin()) {
          family.push_back(h);
          image_family.push_back(image(ws, a, h));
        }
      }
      if (!family.empty()) CHECK(psi(ws, moved1, moved2, image_family).value == psi(ws, mu1, mu2, family).value);
    }
  }
}

TEST_CASE("psi exceeds 1 - 2 epsilon on concentrated measures") {
  oracle::Rng rng(9);
  for (const Graph& g : {spider(3, 2), staircase(2), path_graph(7)}) {
    Wallspace ws(g);
    for (Halfspace h1 : ws.halfspaces()) {
      for (Halfspace h2 : ws.halfspaces()) {
        if (!ws.disjoint(h1, h2) || !ws.strongly_separated(h1, h2)) continue;
        const Rational eps(1, 10);
        for (int trial = 0; trial < 5; ++trial) {
          // Mass 1 - eps/2 inside h_i, the rest on random vertices.
          auto concentrated = [&](Halfspace h) {
            auto inside = ws.vertices(h).to_vector();
            std::vector<std::pair<Vertex, Rational>> w{{inside[rng.below(inside.size())], 1 - eps / 2}};
            Vertex other = rng.below(g.order());
            if (other == w[0].first) {
              w[0].second = 1;
            } else {
              w.emplace_back(other, eps / 2);
            }
            return ProbMeasure::make(g.order(), w);
          };
          auto mu1 = concentrated(h1), mu2 = concentrated(h2);
          REQUIRE(ev(ws, mu1, h1) > 1 - eps);
          CHECK(psi(ws, mu1, mu2).value > 1 - 2 * eps);
        }
      }
    }
  }
}
