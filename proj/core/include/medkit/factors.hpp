#pragma once

#include "medkit/graph.hpp"
#include "medkit/wallspace.hpp"

#include <vector>

namespace medkit {

/// Decomposition of a median graph as an l1 (Cartesian) product.
struct Factorization {
  std::vector<Graph> factors;
  /// Walls of the input owned by each factor, ascending.
  std::vector<std::vector<WallId>> wall_groups;
  /// coordinates[v][k]: vertex of factor k that v projects to.
  std::vector<std::vector<Vertex>> coordinates;
};

/// Groups walls into connected components of the non-transversality graph
/// and dualizes the restricted pocset of each group. A graph without walls
/// (a single vertex) is its own factor. Groups are ordered by lowest wall id.
Factorization irreducible_factors(const Wallspace& ws);

/// Iterated Cartesian product of the factors, first factor most significant.
Graph product_of(const Factorization& f);

/// Index of a coordinate tuple in product_of(f).
Vertex product_index(const Factorization& f, std::span<const Vertex> coordinates);

/// True iff v -> product_index(coordinates[v]) is an isomorphism onto
/// product_of(f).
bool verify_reconstruction(const Graph& g, const Factorization& f);

}  // namespace medkit
