#include "medkit/chains.hpp"
#include "medkit/corpus.hpp"
#include "medkit/error.hpp"
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

/// Square 0-1-3-2 with a pendant leaf at 0 (vertex 4) and at 1 (vertex 5).
Graph square_with_leaves() { return Graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}}); }

}  // namespace

TEST_CASE("chain search") {
  CHECK(find_chains(Wallspace(grid_graph(3, 3)), 0, 2).chains.empty());

  Wallspace p7(path_graph(7));
  const Halfspace h1 = halfspace(p7, {1, 2, 3, 4, 5, 6});
  const Halfspace h2 = halfspace(p7, {4, 5, 6});
  auto found = find_chains(p7, 1, 2);
  bool present = false;
  for (const Chain& c : found.chains) {
    CHECK(is_valid_chain(p7, c));
    if (c.members == std::vector<Halfspace>{h1, h2}) {
      present = true;
      CHECK(c.links[0].gap == 4);
    }
  }
  CHECK(present);
  CHECK_FALSE(found.truncated);

  CHECK_FALSE(find_chains(Wallspace(staircase(4)), 0, 3).chains.empty());
  CHECK(find_chains(p7, 0, 0).chains.empty());
}

TEST_CASE("chain search cutoff") {
  Wallspace tree(random_tree(30, 3));
  auto full = find_chains(tree, 0, 2);
  REQUIRE(full.chains.size() > 5);
  auto capped = find_chains(tree, 0, 2, 5);
  CHECK(capped.truncated);
  REQUIRE(capped.chains.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(capped.chains[i].members == full.chains[i].members);
}

TEST_CASE("chain certificates") {
  Wallspace p7(path_graph(7));
  const Halfspace h1 = halfspace(p7, {1, 2, 3, 4, 5, 6});
  const Halfspace h2 = halfspace(p7, {4, 5, 6});
  CHECK_NOTHROW(make_chain(p7, {h1, h2}, 3));
  CHECK(kind_of([&] { make_chain(p7, {h1, h2}, 4); }) == ErrorKind::InvalidChain);
  CHECK(kind_of([&] { make_chain(p7, {h2, h1}, 0); }) == ErrorKind::InvalidChain);
  CHECK(kind_of([&] { make_chain(p7, {h1, h1}, 0); }) == ErrorKind::InvalidChain);

  Chain forged = make_chain(p7, {h1, h2}, 1);
  forged.links[0].gap = 9;
  CHECK_FALSE(is_valid_chain(p7, forged));

  Wallspace grid(grid_graph(3, 3));
  auto link = certify_link(grid, halfspace(grid, {1, 2, 4, 5, 7, 8}), halfspace(grid, {2, 5, 8}));
  CHECK(link.nested);
  CHECK_FALSE(link.strongly_separated);
}

TEST_CASE("chain extension") {
  Wallspace p7(path_graph(7));
  auto first = extend_chain(p7, Chain{}, 0);
  REQUIRE(first);
  CHECK(first->members.size() == 1);
  CHECK(p7.cardinality(first->members[0]) == 1);

  const Chain chain = make_chain(p7, {halfspace(p7, {1, 2, 3, 4, 5, 6}), halfspace(p7, {4, 5, 6})}, 0);
  auto longer = extend_chain(p7, chain, 0);
  REQUIRE(longer);
  REQUIRE(longer->members.size() == 3);
  CHECK(p7.vertices(longer->members[2]) == set(7, {6}));
  CHECK(is_valid_chain(p7, *longer));

  CHECK_FALSE(extend_chain(p7, *longer, 0));
  CHECK(kind_of([&] { extend_chain(p7, chain, 5); }) == ErrorKind::InvalidChain);
}

TEST_CASE("deep triple medians") {
  Wallspace t(spider(3, 1));
  auto tri = make_separated_triple(t, halfspace(t, {1}), halfspace(t, {2}), halfspace(t, {3}));
  CHECK(deep_triple_median(t, tri).median == 0);

  Wallspace s(spider(3, 2));
  // Legs are 1-2, 3-4, 5-6; outer-leg halfspaces contain two vertices each.
  auto legs = make_separated_triple(s, halfspace(s, {1, 2}), halfspace(s, {3, 4}), halfspace(s, {5, 6}));
  auto result = deep_triple_median(s, legs, TripleMethod::Exhaustive);
  CHECK(result.median == 0);
  CHECK(result.evaluated == 8);

  Wallspace q2(hypercube(2));
  CHECK(kind_of([&] { make_separated_triple(q2, {0, 0}, {1, 0}, {0, 1}); }) == ErrorKind::InvalidTriple);
  CHECK(kind_of([&] { deep_triple_median(q2, SeparatedTriple{{Halfspace{0, 0}, {1, 0}, {0, 1}}}); }) ==
        ErrorKind::InvalidTriple);
}

TEST_CASE("deep triple medians need not be constant on arbitrary separated triples") {
  Wallspace ws(square_with_leaves());
  auto triple = make_separated_triple(ws, halfspace(ws, {4}), halfspace(ws, {5}), halfspace(ws, {2, 3}));
  CHECK(ws.median(4, 5, 2) == 0);
  CHECK(ws.median(4, 5, 3) == 1);
  CHECK(kind_of([&] { deep_triple_median(ws, triple); }) == ErrorKind::NotConstant);
  CHECK(kind_of([&] { deep_triple_median(ws, triple, TripleMethod::Sampled); }) == ErrorKind::NotConstant);
  auto core = median_core(ws);
  CHECK(core.non_constant_triples >= 1);
}

TEST_CASE("exhaustive and sampled triple medians agree") {
  for (int k : {2, 3}) {
    Wallspace st(staircase(k));
    for (const auto& t : separated_triples(st)) {
      auto exhaustive = deep_triple_median(st, t, TripleMethod::Exhaustive);
      auto sampled = deep_triple_median(st, t, TripleMethod::Sampled);
      CHECK(exhaustive.median == sampled.median);
      CHECK(sampled.gate_certified);
    }
  }
}

TEST_CASE("separated triples match a brute-force scan") {
  for (const Graph& g : {spider(4, 2), staircase(2), grid_graph(2, 4), random_tree(12, 5)}) {
    Wallspace ws(g);
    const auto d = oracle::distances(g);
    const auto hs = oracle::halfspaces(g, d);
    std::size_t expected = 0;
    for (std::size_t a = 0; a < hs.size(); ++a) {
      for (std::size_t b = a + 1; b < hs.size(); ++b) {
        for (std::size_t c = b + 1; c < hs.size(); ++c) {
          expected += oracle::strongly_separated(hs, hs[a], hs[b]) && oracle::strongly_separated(hs, hs[a], hs[c]) &&
                      oracle::strongly_separated(hs, hs[b], hs[c]);
        }
      }
    }
    CHECK(separated_triples(ws).size() == expected);
  }
}

TEST_CASE("median core") {
  auto tripod = median_core(Wallspace(spider(3, 1)));
  CHECK(tripod.core == set(4, {0}));
  CHECK_FALSE(tripod.no_regular_directions);

  auto grid = median_core(Wallspace(grid_graph(3, 3)));
  CHECK(grid.core.empty());
  CHECK(grid.no_regular_directions);

  auto spider32 = median_core(Wallspace(spider(3, 2)));
  CHECK(spider32.core == set(7, {0}));

  for (int k = 1; k <= 4; ++k) {
    auto st = median_core(Wallspace(staircase(k)));
    CHECK(st.core == VertexSet::singleton(9 * k + 1, 0));
    CHECK(st.non_constant_triples == 0);
  }
}

TEST_CASE("regular direction report") {
  Wallspace p7(path_graph(7));
  auto report = regular_direction_report(p7, 0, 0);
  REQUIRE(report.levels.size() >= 2);
  CHECK_FALSE(report.levels[1].empty());
  for (Halfspace h : report.levels[0]) CHECK_FALSE(p7.contains(h, 0));
  CHECK(report.levels[0].size() == 6);

  Wallspace grid(grid_graph(3, 4));
  for (std::uint32_t r : {0U, 1U, 2U}) CHECK(regular_direction_report(grid, r, 0).levels.size() <= 1);

  // Every member of level p + 1 nests inside some member of level p.
  Wallspace st(staircase(3));
  auto deep = regular_direction_report(st, 0, 0);
  for (std::size_t p = 1; p < deep.levels.size(); ++p) {
    for (Halfspace inner : deep.levels[p]) {
      bool nested = false;
      for (Halfspace outer : deep.levels[p - 1]) nested = nested || (inner != outer && st.nested(inner, outer));
      CHECK(nested);
    }
  }
}
