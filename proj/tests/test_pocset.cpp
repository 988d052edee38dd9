#include "medkit/corpus.hpp"
#include "medkit/error.hpp"
#include "medkit/pocset.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace medkit;

namespace {

using Pairs = std::vector<std::pair<Pocset::Label, Pocset::Label>>;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::ParseError;
}

/// Orientations counted by trying every choice of sides.
std::size_t brute_orientations(const Pocset& p) {
  const std::size_t m = p.wall_count();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Pocset::Element> chosen;
    for (std::size_t i = 0; i < m; ++i) chosen.push_back((mask >> i) & 1 ? p.walls()[i].second : p.walls()[i].first);
    bool ok = true;
    for (auto a : chosen) {
      for (auto b : chosen) ok = ok && !p.leq(a, p.complement(b));
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("pocset validation") {
  CHECK(kind_of([] { Pocset::make({0, 1, 1}, {{0, 1}}, {}); }) == ErrorKind::InconsistentPocset);
  CHECK(kind_of([] { Pocset::make({0, 1, 2}, {{0, 1}}, {}); }) == ErrorKind::InconsistentPocset);
  CHECK(kind_of([] { Pocset::make({0, 1}, {{0, 0}}, {}); }) == ErrorKind::InconsistentPocset);
  CHECK(kind_of([] { Pocset::make({0, 1}, {{0, 1}}, {{0, 1}}); }) == ErrorKind::InconsistentPocset);
  CHECK(kind_of([] { Pocset::make({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 2}, {2, 0}}); }) ==
        ErrorKind::InconsistentPocset);
  CHECK(kind_of([] { Pocset::make({0, 1}, {{0, 1}}, {{0, 7}}); }) == ErrorKind::InconsistentPocset);
  // 0 <= 2 and 2 <= 1 = 0* close to 0 <= 0*.
  CHECK(kind_of([] { Pocset::make({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 2}, {2, 1}}); }) ==
        ErrorKind::InconsistentPocset);
}

TEST_CASE("pocset closure") {
  auto p = Pocset::make({10, 11, 20, 21, 30, 31}, {{10, 11}, {20, 21}, {30, 31}}, {{10, 20}, {20, 30}});
  Pairs expected{{10, 20}, {10, 30}, {20, 30}, {21, 11}, {31, 11}, {31, 21}};
  CHECK(p.relations() == expected);
  CHECK(p.wall_count() == 3);
  auto sub = p.restrict(std::vector<std::size_t>{0, 2});
  CHECK(sub.relations() == Pairs{{10, 30}, {31, 11}});
}

TEST_CASE("small duals") {
  auto empty = dual_median_graph(Pocset::make({}, {}, {}));
  CHECK(empty.graph.order() == 1);

  auto square = dual_median_graph(Pocset::make({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {}));
  CHECK(oracle::isomorphic(square.graph, hypercube(2)));

  auto chain = dual_median_graph(Pocset::make({0, 1, 2, 3, 4, 5}, {{0, 1}, {2, 3}, {4, 5}}, {{0, 2}, {2, 4}}));
  CHECK(oracle::isomorphic(chain.graph, path_graph(4)));

  auto capped = [] { dual_median_graph(Pocset::make({0, 1, 2, 3, 4, 5}, {{0, 1}, {2, 3}, {4, 5}}, {}), 7); };
  CHECK(kind_of(capped) == ErrorKind::SizeLimit);
}

TEST_CASE("graph to pocset and back") {
  for (const auto& entry : default_corpus()) {
    if (entry.negative_control) continue;
    const Graph g = generate_graph(entry.spec);
    Wallspace ws(g);
    auto dual = dual_median_graph(pocset_of(ws));
    CHECK_MESSAGE(oracle::isomorphic(dual.graph, g), entry.spec.label());
    auto embedding = embed_into_dual(ws, dual);
    CHECK_MESSAGE(is_isomorphism(g, dual.graph, embedding), entry.spec.label());
  }
}

TEST_CASE("random pocsets dualize to median graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto p = random_pocset(9, 0.4, seed);
    auto dual = dual_median_graph(p);
    CHECK(dual.graph.order() == brute_orientations(p));
    CHECK(oracle::is_median_graph(oracle::distances(dual.graph)));
    CHECK(Wallspace(dual.graph).wall_count() == p.wall_count());
  }
}
