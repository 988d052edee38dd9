#pragma once

#include "medkit/barycenter.hpp"
#include "medkit/corpus.hpp"
#include "medkit/graph.hpp"
#include "medkit/pocset.hpp"
#include "medkit/wallspace.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace medkit {

/// Insertion-ordered JSON, so emitted documents have a stable field order.
using Json = nlohmann::ordered_json;

/// Throws ParseError with the parser's message.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// {"n": N, "edges": [[u, v], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Sorted array of vertex ids.
Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, std::size_t order);

/// {"elements": [...], "complement": [[a, a*], ...], "leq": [[a, b], ...]}
/// with leq the closed relation minus reflexive pairs.
Json to_json(const Pocset& p);
Pocset pocset_from_json(const Json& j);

/// [{"vertex": v, "num": p, "den": q}, ...] in vertex order. Numbers that do
/// not fit 64 bits are written as decimal strings.
Json to_json(const ProbMeasure& mu);
ProbMeasure measure_from_json(const Json& j, std::size_t order);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
Json to_json(const Rational& r);

/// Halfspace ids.
Json to_json(const std::vector<Halfspace>& hs);

/// Either {"graph": {...}}, {"pocset": {...}}, or a bare graph object.
Generated input_from_json(const Json& j);
Json to_json(const Generated& g);

/// Undirected DOT with optional highlighted vertex sets; a vertex in
/// several sets takes the last colour.
std::string to_dot(const Graph& g, const std::vector<std::pair<VertexSet, std::string>>& highlights = {},
                   std::string_view name = "G");

}  // namespace medkit
