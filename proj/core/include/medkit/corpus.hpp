#pragma once

#include "medkit/graph.hpp"
#include "medkit/pocset.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace medkit {

/// Generator name plus k=v parameters. Generation is deterministic in
/// (generator, params, seed).
///
///   path n               cycle n             hypercube n
///   grid m n             tree n (Prüfer)      spider legs len
///   staircase steps      bipartite a b       random-pocset walls density
struct CorpusSpec {
  std::string generator;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  /// "grid m=3 n=4", plus " seed=S" for seeded generators.
  std::string label() const;
  friend bool operator==(const CorpusSpec&, const CorpusSpec&) = default;
};

/// Parses "k=v" tokens. Throws InvalidSpec.
CorpusSpec make_spec(std::string generator, const std::vector<std::string>& assignments, std::uint64_t seed = 0);
CorpusSpec make_spec(std::string generator, std::initializer_list<std::pair<std::string, std::int64_t>> params,
                     std::uint64_t seed = 0);

using Generated = std::variant<Graph, Pocset>;

/// Throws InvalidSpec for unknown generators or out-of-bound parameters.
Generated generate(const CorpusSpec& spec);
/// Like generate, dualizing pocsets.
Graph generate_graph(const CorpusSpec& spec);
bool is_seeded(const std::string& generator);
std::vector<std::string> generator_names();

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph hypercube(std::size_t dim);
Graph grid_graph(std::size_t m, std::size_t n);
/// Tree decoded from a random Prüfer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// `legs` paths of `length` edges joined at vertex 0.
Graph spider(std::size_t legs, std::size_t length);
/// Three flights of `steps` unit squares, each flight a diagonal chain of
/// squares glued corner to corner, all starting from vertex 0.
Graph staircase(std::size_t steps);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Walls 0..w-1 with elements 2i, 2i+1. Each pair of walls proposes one
/// random relation with probability `density`; proposals that would make
/// the pocset inconsistent are dropped.
Pocset random_pocset(std::size_t walls, double density, std::uint64_t seed);

struct CorpusEntry {
  CorpusSpec spec;
  /// Expected to fail the median check.
  bool negative_control = false;
};

/// Paths, cycles (negative), cubes, grids, trees, spiders, staircases and
/// K2,3 (negative).
std::vector<CorpusEntry> default_corpus();
/// Random pocsets, `count` seeds starting at `first_seed`.
std::vector<CorpusSpec> pocset_corpus(std::size_t walls, double density, std::uint64_t first_seed, std::size_t count);

}  // namespace medkit
