#include "medkit/io.hpp"

#include "medkit/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace medkit {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::uint64_t unsigned_at(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    parse_error(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) parse_error(std::string("field '") + key + "' must be an array");
  return a;
}

std::pair<std::int64_t, std::int64_t> label_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    parse_error("expected a pair [a, b] of integers");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Json integer_json(const boost::multiprecision::cpp_int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

boost::multiprecision::cpp_int integer_from(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    return j.get<std::int64_t>();
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      parse_error(std::string(what) + " string is not an integer");
    }
    return boost::multiprecision::cpp_int(s);
  }
  parse_error(std::string(what) + " must be an integer");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_error("cannot write " + path);
  out << text;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json j;
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  const std::uint64_t n = unsigned_at(field(j, "n"), "n");
  std::vector<Edge> edges;
  for (const Json& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) parse_error("edge must be a pair [u, v]");
    edges.push_back({static_cast<Vertex>(unsigned_at(e[0], "edge endpoint")),
                     static_cast<Vertex>(unsigned_at(e[1], "edge endpoint"))});
  }
  return Graph(n, std::move(edges));
}

Json to_json(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

VertexSet vertex_set_from_json(const Json& j, std::size_t order) {
  if (!j.is_array()) parse_error("vertex set must be an array");
  VertexSet s(order);
  for (const Json& v : j) {
    auto id = unsigned_at(v, "vertex");
    if (id >= order) parse_error("vertex " + std::to_string(id) + " out of range");
    s.insert(static_cast<Vertex>(id));
  }
  return s;
}

Json to_json(const Pocset& p) {
  Json elements = Json::array(), complement = Json::array(), leq = Json::array();
  for (Pocset::Element e = 0; e < p.size(); ++e) elements.push_back(p.label(e));
  for (auto [a, b] : p.walls()) complement.push_back({p.label(a), p.label(b)});
  for (auto [a, b] : p.relations()) leq.push_back({a, b});
  Json j;
  j["elements"] = std::move(elements);
  j["complement"] = std::move(complement);
  j["leq"] = std::move(leq);
  return j;
}

Pocset pocset_from_json(const Json& j) {
  std::vector<Pocset::Label> labels;
  for (const Json& e : array_field(j, "elements")) {
    if (!e.is_number_integer()) parse_error("pocset element must be an integer");
    labels.push_back(e.get<Pocset::Label>());
  }
  std::vector<std::pair<Pocset::Label, Pocset::Label>> pairs, leq;
  for (const Json& c : array_field(j, "complement")) pairs.push_back(label_pair(c));
  if (j.contains("leq")) {
    for (const Json& r : array_field(j, "leq")) leq.push_back(label_pair(r));
  }
  return Pocset::make(std::move(labels), pairs, leq);
}

Json to_json(const ProbMeasure& mu) {
  Json a = Json::array();
  for (const auto& [v, w] : mu.weights()) {
    Json entry;
    entry["vertex"] = v;
    entry["num"] = integer_json(boost::multiprecision::numerator(w));
    entry["den"] = integer_json(boost::multiprecision::denominator(w));
    a.push_back(std::move(entry));
  }
  return a;
}

ProbMeasure measure_from_json(const Json& j, std::size_t order) {
  if (!j.is_array()) parse_error("measure must be an array of {vertex, num, den}");
  std::vector<std::pair<Vertex, Rational>> weights;
  for (const Json& entry : j) {
    auto v = unsigned_at(field(entry, "vertex"), "vertex");
    auto num = integer_from(field(entry, "num"), "num");
    auto den = integer_from(field(entry, "den"), "den");
    if (den <= 0) parse_error("den must be positive");
    if (v > std::numeric_limits<Vertex>::max()) parse_error("vertex out of range");
    weights.emplace_back(static_cast<Vertex>(v), Rational(num, den));
  }
  return ProbMeasure::make(order, weights);
}

std::string to_string(const Rational& r) { return r.str(); }

Json to_json(const Rational& r) { return Json(to_string(r)); }

Json to_json(const std::vector<Halfspace>& hs) {
  Json a = Json::array();
  for (Halfspace h : hs) a.push_back(h.id());
  return a;
}

Generated input_from_json(const Json& j) {
  if (j.is_object() && j.contains("pocset")) return pocset_from_json(j["pocset"]);
  if (j.is_object() && j.contains("graph")) return graph_from_json(j["graph"]);
  if (j.is_object() && j.contains("elements")) return pocset_from_json(j);
  return graph_from_json(j);
}

Json to_json(const Generated& g) {
  Json j;
  if (const auto* p = std::get_if<Pocset>(&g)) {
    j["pocset"] = to_json(*p);
  } else {
    j["graph"] = to_json(std::get<Graph>(g));
  }
  return j;
}

std::string to_dot(const Graph& g, const std::vector<std::pair<VertexSet, std::string>>& highlights,
                   std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::string* colour = nullptr;
    for (const auto& [set, c] : highlights) {
      if (set.universe() == g.order() && set.contains(v)) colour = &c;
    }
    out << "  " << v;
    if (colour) out << " [style=filled, fillcolor=\"" << *colour << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace medkit
