#include "medkit/corpus.hpp"
#include "medkit/error.hpp"
#include "medkit/factors.hpp"
#include "medkit/wallspace.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace medkit;

namespace {

VertexSet set(std::size_t n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }

Halfspace halfspace(const Wallspace& ws, std::initializer_list<Vertex> vs) {
  auto h = ws.find_halfspace(set(ws.order(), vs));
  REQUIRE(h);
  return *h;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("walls of small graphs") {
  CHECK(Wallspace(path_graph(4)).wall_count() == 3);
  Wallspace q3(hypercube(3));
  CHECK(q3.wall_count() == 3);
  for (const Wall& w : q3.walls()) {
    CHECK(w.sides[0].size() == 4);
    CHECK(w.sides[1].size() == 4);
    CHECK(w.edges.size() == 4);
  }
  Wallspace t(spider(3, 1));
  REQUIRE(t.wall_count() == 3);
  std::vector<VertexSet> leaves;
  for (const Wall& w : t.walls()) leaves.push_back(w.sides[0].size() == 1 ? w.sides[0] : w.sides[1]);
  CHECK(leaves == std::vector<VertexSet>{set(4, {1}), set(4, {2}), set(4, {3})});
}

TEST_CASE("non-median inputs fail the wall construction") {
  CHECK(kind_of([] { Wallspace ws(complete_bipartite(2, 3)); }) == ErrorKind::ThetaNotTransitive);
  CHECK(kind_of([] { Wallspace ws(cycle_graph(5)); }) == ErrorKind::ThetaNotTransitive);
}

TEST_CASE("halfspaces between") {
  Wallspace p4(path_graph(4));
  CHECK(halfspaces_between(p4, set(4, {0}), set(4, {0})).empty());
  CHECK(halfspaces_between(p4, set(4, {0}), set(4, {3})).size() == 3);
  Wallspace q2(hypercube(2));
  auto between = halfspaces_between(q2, set(4, {0}), set(4, {3}));
  REQUIRE(between.size() == 2);
  CHECK(q2.vertices(between[0]) == set(4, {1, 3}));
  CHECK(q2.vertices(between[1]) == set(4, {2, 3}));
}

TEST_CASE("transversality") {
  Wallspace q2(hypercube(2));
  CHECK(q2.transverse(WallId{0}, WallId{1}));
  Halfspace h{0, 0};
  CHECK_FALSE(q2.transverse(h, h));
  CHECK_FALSE(q2.transverse(h, h.complement()));
  Wallspace tree(random_tree(15, 4));
  for (WallId a = 0; a < tree.wall_count(); ++a) {
    for (WallId b = 0; b < tree.wall_count(); ++b) CHECK_FALSE(tree.transverse(a, b));
  }
}

TEST_CASE("strong separation") {
  Wallspace t(spider(3, 1));
  CHECK(t.strongly_separated(halfspace(t, {1}), halfspace(t, {2})));

  Wallspace grid(grid_graph(3, 3));
  CHECK_FALSE(grid.strongly_separated(halfspace(grid, {0, 3, 6}), halfspace(grid, {2, 5, 8})));
  CHECK(kind_of([&] { (void)grid.strongly_separated(halfspace(grid, {0, 3, 6}), halfspace(grid, {0, 1, 2})); }) ==
        ErrorKind::NotDisjoint);

  // First and last step of one flight of a staircase.
  const std::size_t steps = 4;
  Wallspace st(staircase(steps));
  const Graph& g = st.graph();
  Vertex far = 1;
  for (Vertex v = 1; v <= 3 * steps; ++v) {
    if (g.distance(0, v) > g.distance(0, far)) far = v;
  }
  CHECK(g.distance(0, far) == 2 * steps);
  Halfspace first{}, last{};
  bool found_first = false, found_last = false;
  for (Halfspace h : st.halfspaces()) {
    const Wall& w = st.wall(h.wall);
    bool touches_landing = std::any_of(w.edges.begin(), w.edges.end(), [](Edge e) { return e.u == 0; });
    bool touches_far = std::any_of(w.edges.begin(), w.edges.end(), [&](Edge e) { return e.v == far || e.u == far; });
    if (touches_landing && w.edges.front().v <= 3 * steps && st.contains(h, 0)) {
      first = h;
      found_first = true;
    }
    if (touches_far && !st.contains(h, 0)) {
      last = h;
      found_last = true;
    }
  }
  REQUIRE(found_first);
  REQUIRE(found_last);
  CHECK(st.disjoint(first, last));
  CHECK(st.strongly_separated(first, last));
}

TEST_CASE("rank") {
  CHECK(rank(Wallspace(random_tree(20, 9))) == 1);
  CHECK(rank(Wallspace(hypercube(3))) == 3);
  CHECK(rank(Wallspace(grid_graph(3, 3))) == 2);
  CHECK(rank(Wallspace(staircase(3))) == 2);
  CHECK(rank(Wallspace(path_graph(1))) == 0);
  Wallspace q4(hypercube(4));
  CHECK(maximum_transverse_family(q4).size() == 4);
}

TEST_CASE("irreducible factors") {
  auto q2 = irreducible_factors(Wallspace(hypercube(2)));
  REQUIRE(q2.factors.size() == 2);
  for (const Graph& f : q2.factors) CHECK(f == path_graph(2));
  CHECK(verify_reconstruction(hypercube(2), q2));

  auto p4 = irreducible_factors(Wallspace(path_graph(4)));
  REQUIRE(p4.factors.size() == 1);
  CHECK(oracle::isomorphic(p4.factors[0], path_graph(4)));

  const Graph grid = grid_graph(3, 3);
  auto g = irreducible_factors(Wallspace(grid));
  REQUIRE(g.factors.size() == 2);
  for (const Graph& f : g.factors) CHECK(oracle::isomorphic(f, path_graph(3)));
  CHECK(verify_reconstruction(grid, g));
  CHECK(oracle::isomorphic(product_of(g), grid));

  auto single = irreducible_factors(Wallspace(path_graph(1)));
  CHECK(single.factors.size() == 1);
}

TEST_CASE("separation") {
  Wallspace p4(path_graph(4));
  CHECK(p4.vertices(separate(p4, set(4, {0}), set(4, {2, 3}))) == set(4, {2, 3}));
  Wallspace q2(hypercube(2));
  CHECK(q2.vertices(separate(q2, set(4, {0}), set(4, {3}))) == set(4, {1, 3}));
  Wallspace t(spider(3, 1));
  CHECK(t.vertices(separate(t, set(4, {1}), set(4, {2}))) == set(4, {2}));

  CHECK(kind_of([&] { separate(p4, set(4, {0, 1}), set(4, {1, 2})); }) == ErrorKind::NotDisjoint);
  CHECK(kind_of([&] { separate(p4, set(4, {0, 2}), set(4, {3})); }) == ErrorKind::NotConvex);
  CHECK(kind_of([&] { separate(p4, VertexSet(4), set(4, {3})); }) == ErrorKind::EmptySet);
}

TEST_CASE("fundamental family") {
  Wallspace p4(path_graph(4));
  auto fam = fundamental_family(p4);
  CHECK(fam.size() == 6);
  auto check = verify_fundamental_family(p4, fam);
  CHECK(check.separates_pairs);
  CHECK(check.covers_halfspaces);

  Wallspace edge(path_graph(2));
  CHECK(fundamental_family(edge).size() == 2);

  for (const auto& spec : {make_spec("staircase", {{"steps", 3}}), make_spec("grid", {{"m", 3}, {"n", 4}}),
                           make_spec("tree", {{"n", 20}}, 2), make_spec("hypercube", {{"n", 4}})}) {
    Wallspace ws(generate_graph(spec));
    auto family = fundamental_family(ws);
    auto verdict = verify_fundamental_family(ws, family);
    CHECK_MESSAGE(verdict.separates_pairs, spec.label());
    CHECK_MESSAGE(verdict.covers_halfspaces, spec.label());
  }

  // A family missing a wall cannot separate the pair across it.
  std::vector<Halfspace> partial{{0, 0}, {0, 1}};
  auto broken = verify_fundamental_family(p4, partial);
  CHECK_FALSE(broken.separates_pairs);
  CHECK(broken.unseparated_pair);
}

TEST_CASE("flips") {
  Wallspace t(spider(3, 1));
  Automorphism swap({0, 2, 1, 3});
  CHECK(flips(t, swap, halfspace(t, {1})));
  for (Halfspace h : t.halfspaces()) CHECK_FALSE(flips(t, Automorphism::identity(4), h));

  Wallspace q2(hypercube(2));
  Automorphism rotation({2, 0, 3, 1});
  CHECK_FALSE(flips(q2, rotation, halfspace(q2, {0, 1})));
  CHECK(q2.vertices(image(q2, rotation, halfspace(q2, {0, 1}))) == set(4, {0, 2}));
  CHECK(kind_of([&] { flips(q2, Automorphism({1, 0, 2, 3}), Halfspace{0, 0}); }) == ErrorKind::NotAutomorphism);
}

TEST_CASE("distances between halfspaces and majority-vote medians") {
  Wallspace p7(path_graph(7));
  Halfspace low = halfspace(p7, {0});
  Halfspace high = halfspace(p7, {4, 5, 6});
  CHECK(p7.distance(low, high) == 4);

  Wallspace st(staircase(2));
  const auto d = oracle::distances(st.graph());
  for (Vertex x = 0; x < st.order(); ++x) {
    for (Vertex y = 0; y < st.order(); ++y) {
      for (Vertex z = 0; z < st.order(); z += 3) {
        CHECK(st.median(x, y, z) == oracle::medians(d, x, y, z).front());
      }
    }
  }
}
