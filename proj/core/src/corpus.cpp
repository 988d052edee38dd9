#include "medkit/corpus.hpp"

#include "medkit/error.hpp"

#include <charconv>
#include <queue>
#include <random>
#include <set>

namespace medkit {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

constexpr std::size_t kMaxVertices = std::size_t{1} << 14;

std::int64_t int_param(const CorpusSpec& spec, const std::string& key, std::int64_t lo, std::int64_t hi) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) invalid(spec.generator + " needs parameter " + key);
  std::int64_t value = 0;
  const std::string& text = it->second;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) invalid(key + "=" + text + " is not an integer");
  if (value < lo || value > hi) {
    invalid(spec.generator + " " + key + "=" + text + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
            "]");
  }
  return value;
}

double real_param(const CorpusSpec& spec, const std::string& key, double lo, double hi) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) invalid(spec.generator + " needs parameter " + key);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) invalid(key + "=" + it->second + " is not a number");
  if (!(value >= lo && value <= hi)) invalid(spec.generator + " " + key + "=" + it->second + " out of range");
  return value;
}

void require_keys(const CorpusSpec& spec, std::initializer_list<const char*> keys) {
  for (const auto& entry : spec.params) {
    bool known = false;
    for (const char* k : keys) known = known || entry.first == k;
    if (!known) invalid(spec.generator + " has no parameter " + entry.first);
  }
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string CorpusSpec::label() const {
  std::string s = generator;
  for (const auto& [k, v] : params) s += " " + k + "=" + v;
  if (is_seeded(generator)) s += " seed=" + std::to_string(seed);
  return s;
}

CorpusSpec make_spec(std::string generator, const std::vector<std::string>& assignments, std::uint64_t seed) {
  CorpusSpec spec{std::move(generator), {}, seed};
  for (const std::string& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == a.size()) invalid("expected k=v, got '" + a + "'");
    if (!spec.params.emplace(a.substr(0, eq), a.substr(eq + 1)).second) invalid("parameter repeated: " + a);
  }
  return spec;
}

CorpusSpec make_spec(std::string generator, std::initializer_list<std::pair<std::string, std::int64_t>> params,
                     std::uint64_t seed) {
  CorpusSpec spec{std::move(generator), {}, seed};
  for (const auto& [k, v] : params) spec.params[k] = std::to_string(v);
  return spec;
}

bool is_seeded(const std::string& generator) { return generator == "tree" || generator == "random-pocset"; }

std::vector<std::string> generator_names() {
  return {"path", "cycle", "hypercube", "grid", "tree", "spider", "staircase", "bipartite", "random-pocset"};
}

Generated generate(const CorpusSpec& spec) {
  const std::string& g = spec.generator;
  const auto max_n = static_cast<std::int64_t>(kMaxVertices);
  if (g == "path") {
    require_keys(spec, {"n"});
    return path_graph(int_param(spec, "n", 1, max_n));
  }
  if (g == "cycle") {
    require_keys(spec, {"n"});
    return cycle_graph(int_param(spec, "n", 3, max_n));
  }
  if (g == "hypercube") {
    require_keys(spec, {"n"});
    return hypercube(int_param(spec, "n", 0, 14));
  }
  if (g == "grid") {
    require_keys(spec, {"m", "n"});
    auto m = int_param(spec, "m", 1, max_n), n = int_param(spec, "n", 1, max_n);
    if (m * n > max_n) invalid("grid larger than " + std::to_string(max_n) + " vertices");
    return grid_graph(m, n);
  }
  if (g == "tree") {
    require_keys(spec, {"n"});
    return random_tree(int_param(spec, "n", 1, max_n), spec.seed);
  }
  if (g == "spider") {
    require_keys(spec, {"legs", "len"});
    auto legs = int_param(spec, "legs", 1, 256), len = int_param(spec, "len", 1, 256);
    return spider(legs, len);
  }
  if (g == "staircase") {
    require_keys(spec, {"steps"});
    return staircase(int_param(spec, "steps", 1, 256));
  }
  if (g == "bipartite") {
    require_keys(spec, {"a", "b"});
    return complete_bipartite(int_param(spec, "a", 1, 128), int_param(spec, "b", 1, 128));
  }
  if (g == "random-pocset") {
    require_keys(spec, {"walls", "density"});
    return random_pocset(int_param(spec, "walls", 0, 64), real_param(spec, "density", 0.0, 1.0), spec.seed);
  }
  invalid("unknown generator '" + g + "'");
}

Graph generate_graph(const CorpusSpec& spec) {
  Generated out = generate(spec);
  if (auto* p = std::get_if<Pocset>(&out)) return dual_median_graph(*p).graph;
  return std::get<Graph>(std::move(out));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) invalid("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < dim; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(n, std::move(edges));
}

Graph grid_graph(std::size_t m, std::size_t n) { return cartesian_product(path_graph(m), path_graph(n)); }

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph(n, std::move(edges));
}

Graph spider(std::size_t legs, std::size_t length) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < length; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

Graph staircase(std::size_t steps) {
  // Flight cells (i, j) with 0 <= i, j <= steps and |i - j| <= 1; (0, 0) is
  // the shared landing, vertex 0.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i <= steps; ++i) {
    for (std::size_t j = (i == 0 ? 0 : i - 1); j <= std::min(steps, i + 1); ++j) {
      if (i != 0 || j != 0) cells.emplace_back(i, j);
    }
  }
  const std::size_t per_flight = cells.size();
  std::map<std::pair<std::size_t, std::size_t>, Vertex> local;
  for (Vertex c = 0; c < per_flight; ++c) local[cells[c]] = c + 1;
  std::vector<Edge> edges;
  for (std::size_t f = 0; f < 3; ++f) {
    auto id = [&](std::size_t i, std::size_t j) -> Vertex {
      if (i == 0 && j == 0) return 0;
      return static_cast<Vertex>(f * per_flight + local.at({i, j}));
    };
    auto in_band = [&](std::size_t i, std::size_t j) { return i <= steps && j <= steps && i <= j + 1 && j <= i + 1; };
    for (std::size_t i = 0; i <= steps; ++i) {
      for (std::size_t j = 0; j <= steps; ++j) {
        if (!in_band(i, j)) continue;
        if (in_band(i + 1, j)) edges.push_back({id(i, j), id(i + 1, j)});
        if (in_band(i, j + 1)) edges.push_back({id(i, j), id(i, j + 1)});
      }
    }
  }
  return Graph(1 + 3 * per_flight, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  }
  return Graph(a + b, std::move(edges));
}

Pocset random_pocset(std::size_t walls, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Pocset::Label> labels;
  std::vector<std::pair<Pocset::Label, Pocset::Label>> pairs;
  for (std::size_t w = 0; w < walls; ++w) {
    labels.push_back(static_cast<Pocset::Label>(2 * w));
    labels.push_back(static_cast<Pocset::Label>(2 * w + 1));
    pairs.emplace_back(2 * w, 2 * w + 1);
  }
  std::vector<std::pair<Pocset::Label, Pocset::Label>> leq;
  for (std::size_t i = 0; i < walls; ++i) {
    for (std::size_t j = i + 1; j < walls; ++j) {
      if (unit_real(rng) >= density) continue;
      const auto side = rng();
      Pocset::Label a = 2 * i + (side & 1), b = 2 * j + ((side >> 1) & 1);
      if (side & 4) std::swap(a, b);
      leq.emplace_back(a, b);
      try {
        (void)Pocset::make(labels, pairs, leq);
      } catch (const Error&) {
        leq.pop_back();
      }
    }
  }
  return Pocset::make(std::move(labels), pairs, leq);
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](CorpusSpec s, bool negative = false) { out.push_back({std::move(s), negative}); };
  for (int n : {2, 5, 7, 8}) add(make_spec("path", {{"n", n}}));
  add(make_spec("cycle", {{"n", 6}}), true);
  for (int n : {1, 2, 3, 4}) add(make_spec("hypercube", {{"n", n}}));
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 4}}) add(make_spec("grid", {{"m", m}, {"n", n}}));
  for (auto [n, seed] : {std::pair{12, 1}, {20, 2}, {30, 3}}) add(make_spec("tree", {{"n", n}}, seed));
  for (auto [legs, len] : {std::pair{3, 1}, {3, 2}, {4, 2}, {5, 3}}) {
    add(make_spec("spider", {{"legs", legs}, {"len", len}}));
  }
  for (int k : {1, 2, 3, 4}) add(make_spec("staircase", {{"steps", k}}));
  add(make_spec("bipartite", {{"a", 2}, {"b", 3}}), true);
  return out;
}

std::vector<CorpusSpec> pocset_corpus(std::size_t walls, double density, std::uint64_t first_seed, std::size_t count) {
  std::vector<CorpusSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    CorpusSpec s{"random-pocset", {{"walls", std::to_string(walls)}, {"density", std::to_string(density)}},
                 first_seed + i};
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace medkit
