#include "medkit/chains.hpp"
#include "medkit/corpus.hpp"
#include "medkit/error.hpp"
#include "medkit/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace medkit;

namespace {

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

TEST_CASE("generator examples") {
  const Graph q3 = generate_graph(make_spec("hypercube", {{"n", 3}}));
  CHECK(q3.order() == 8);
  CHECK(q3.edges().size() == 12);
  CHECK(rank(Wallspace(q3)) == 3);

  const Graph st = generate_graph(make_spec("staircase", {{"steps", 4}}));
  CHECK(is_median_graph(st).is_median);
  CHECK_FALSE(find_chains(Wallspace(st), 0, 3).chains.empty());

  CHECK_FALSE(is_median_graph(generate_graph(make_spec("cycle", {{"n", 6}}))).is_median);
}

TEST_CASE("generator shapes") {
  CHECK(spider(3, 1).order() == 4);
  CHECK(spider(4, 3).edges().size() == 12);
  for (std::size_t n : {1, 2, 3, 10, 50}) {
    const Graph t = random_tree(n, 11);
    CHECK(t.order() == n);
    CHECK(t.edges().size() == n - 1);
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    const Graph s = staircase(k);
    CHECK(s.order() == 9 * k + 1);
    CHECK(s.edges().size() == 12 * k);
    Wallspace ws(s);
    CHECK(ws.wall_count() == 6 * k);
    CHECK(rank(ws) == 2);
  }
  CHECK(complete_bipartite(2, 3).edges().size() == 6);
  CHECK(grid_graph(3, 4).order() == 12);
}

TEST_CASE("generation is deterministic") {
  auto spec = make_spec("tree", {{"n", 25}}, 42);
  CHECK(generate_graph(spec) == generate_graph(spec));
  CHECK_FALSE(generate_graph(spec) == generate_graph(make_spec("tree", {{"n", 25}}, 43)));
  auto p1 = std::get<Pocset>(generate(make_spec("random-pocset", {"walls=12", "density=0.3"}, 7)));
  auto p2 = std::get<Pocset>(generate(make_spec("random-pocset", {"walls=12", "density=0.3"}, 7)));
  CHECK(p1.relations() == p2.relations());
  CHECK(p1.wall_count() == 12);
}

TEST_CASE("spec labels and parsing") {
  CHECK(make_spec("grid", {"m=3", "n=4"}).label() == "grid m=3 n=4");
  CHECK(make_spec("tree", {"n=9"}, 5).label() == "tree n=9 seed=5");
  CHECK(kind_of([] { make_spec("grid", {"m3"}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { make_spec("grid", {"m=3", "m=4"}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { generate(make_spec("grid", {"m=3"})); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { generate(make_spec("grid", {"m=3", "n=x"})); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { generate(make_spec("path", {"n=0"})); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { generate(make_spec("path", {"n=3", "k=2"})); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { generate(make_spec("moebius", {"n=3"})); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { generate(make_spec("random-pocset", {"walls=3", "density=2"})); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("default corpus") {
  for (const auto& entry : default_corpus()) {
    const Graph g = generate_graph(entry.spec);
    CHECK_MESSAGE(is_median_graph(g).is_median != entry.negative_control, entry.spec.label());
  }
}

TEST_CASE("graph round trip") {
  const Graph g = staircase(2);
  const Json j = to_json(g);
  CHECK(graph_from_json(parse_json(j.dump())) == g);
  CHECK(to_json(graph_from_json(j)).dump() == j.dump());
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"n": 2})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"n": 2, "edges": [[0]]})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"n": -2, "edges": []})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_json("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { graph_from_json(parse_json(R"({"n": 3, "edges": [[0, 1]]})")); }) ==
        ErrorKind::DisconnectedGraph);
}

TEST_CASE("pocset round trip") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Pocset p = random_pocset(8, 0.5, seed);
    const Json j = to_json(p);
    const Pocset q = pocset_from_json(parse_json(j.dump()));
    CHECK(q.relations() == p.relations());
    CHECK(to_json(q).dump() == j.dump());
  }
  CHECK(kind_of([] { pocset_from_json(parse_json(R"({"elements": [0, 1], "complement": [[0, 1]], "leq": [[0, 1]]})")); }) ==
        ErrorKind::InconsistentPocset);
  const Json wrapped = to_json(Generated(random_pocset(3, 1.0, 2)));
  CHECK(std::holds_alternative<Pocset>(input_from_json(wrapped)));
  CHECK(std::holds_alternative<Graph>(input_from_json(to_json(path_graph(3)))));
}

TEST_CASE("measure round trip") {
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    auto mu = rng.measure(10, 6);
    const Json j = to_json(mu);
    auto back = measure_from_json(parse_json(j.dump()), 10);
    CHECK(back == mu);
    CHECK(to_json(back).dump() == j.dump());
  }
  auto big = measure_from_json(
      parse_json(R"([{"vertex": 0, "num": "1", "den": "100000000000000000000000"},
                    {"vertex": 1, "num": "99999999999999999999999", "den": "100000000000000000000000"}])"),
      2);
  CHECK(big.weight(0) == Rational(boost::multiprecision::cpp_int(1),
                                  boost::multiprecision::cpp_int("100000000000000000000000")));
  CHECK(measure_from_json(parse_json(to_json(big).dump()), 2) == big);
  CHECK(kind_of([] { measure_from_json(parse_json(R"([{"vertex": 0, "num": 1, "den": 2}])"), 2); }) ==
        ErrorKind::InvalidMeasure);
  CHECK(kind_of([] { measure_from_json(parse_json(R"([{"vertex": 0, "num": 1, "den": 0}])"), 2); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { measure_from_json(parse_json(R"([{"vertex": 0, "num": 1}])"), 2); }) == ErrorKind::ParseError);
}

TEST_CASE("vertex sets and rationals") {
  const VertexSet s(6, {1, 4, 5});
  CHECK(to_json(s).dump() == "[1,4,5]");
  CHECK(vertex_set_from_json(parse_json("[5, 1, 4]"), 6) == s);
  CHECK(kind_of([] { vertex_set_from_json(parse_json("[7]"), 6); }) == ErrorKind::ParseError);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(2)) == "2");
}

TEST_CASE("dot export") {
  const Graph g = path_graph(3);
  const std::string dot = to_dot(g, {{VertexSet(3, {0}), "lightblue"}, {VertexSet(3, {1}), "gold"}}, "P3");
  CHECK(dot.rfind("graph P3 {", 0) == 0);
  CHECK(dot.find("0 [style=filled, fillcolor=\"lightblue\"]") != std::string::npos);
  CHECK(dot.find("1 [style=filled, fillcolor=\"gold\"]") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}
