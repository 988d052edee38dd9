#pragma once

#include "medkit/vertex_set.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace medkit {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Symmetric all-pairs shortest-path matrix with unit edge lengths.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  std::size_t order() const noexcept { return n_; }
  std::uint16_t operator()(Vertex a, Vertex b) const { return d_[std::size_t{a} * n_ + b]; }
  std::uint16_t& at(Vertex a, Vertex b) { return d_[std::size_t{a} * n_ + b]; }
  std::span<const std::uint16_t> row(Vertex a) const { return {d_.data() + std::size_t{a} * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> d_;
};

/// BFS from every vertex. Throws DisconnectedGraph if some pair is unreachable.
DistanceMatrix all_pairs_distances(std::size_t n, std::span<const Edge> edges);

/// Finite connected simple graph together with its graph metric. Immutable
/// after construction. The median axiom is *not* enforced here; use
/// is_median_graph to certify it.
class Graph {
 public:
  /// Throws InvalidGraph (n == 0, loops, repeated edges, ids out of range)
  /// or DisconnectedGraph.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  /// Edges normalized to u < v and sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::uint16_t distance(Vertex a, Vertex b) const { return dist_(a, b); }
  const DistanceMatrix& distances() const noexcept { return dist_; }
  bool adjacent(Vertex a, Vertex b) const { return dist_(a, b) == 1; }
  std::uint16_t diameter() const noexcept { return diameter_; }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  DistanceMatrix dist_;
  std::uint16_t diameter_ = 0;
};

/// {c : d(a,b) = d(a,c) + d(c,b)}.
VertexSet interval(const Graph& g, Vertex a, Vertex b);

/// Unique point of [x,y] ∩ [y,z] ∩ [x,z]. Throws NotMedian otherwise.
Vertex median(const Graph& g, Vertex x, Vertex y, Vertex z);

struct MedianVerdict {
  bool is_median = true;
  /// A triple whose interval intersection is empty or has several points.
  std::optional<std::array<Vertex, 3>> witness;
  std::size_t witness_median_count = 0;
};

/// Exhaustive check of the median axiom over all unordered triples.
MedianVerdict is_median_graph(const Graph& g);

bool is_convex(const Graph& g, const VertexSet& s);

/// Least convex superset, by closing under intervals until nothing changes.
VertexSet convex_hull(const Graph& g, const VertexSet& s);

/// Nearest-point projection onto a fixed convex set. Construction validates
/// convexity once, so repeated projections are cheap.
class Gate {
 public:
  /// Throws NotConvex, or EmptySet when target is empty.
  Gate(const Graph& g, VertexSet target);

  Vertex operator()(Vertex x) const;
  const VertexSet& target() const noexcept { return target_; }

 private:
  const Graph* graph_;
  VertexSet target_;
  std::vector<Vertex> members_;
};

Vertex gate(const Graph& g, const VertexSet& c, Vertex x);

struct GateImage {
  VertexSet image;
  /// False when C ∩ C' is empty; the image is still reported.
  bool intersecting = true;
};

/// {gate(C, x) : x ∈ C'}. Throws NotConvex if either set is not convex.
GateImage gate_image(const Graph& g, const VertexSet& c, const VertexSet& c_prime);

struct HellyWitness {
  /// Least vertex of the total intersection, when all pairs meet.
  std::optional<Vertex> common;
  /// First pair (in index order) with empty intersection.
  std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;
};

/// Throws NotConvex (or EmptySet for an empty member / empty list).
HellyWitness helly_witness(const Graph& g, std::span<const VertexSet> sets);

/// Closure of s under the median operation.
VertexSet median_hull(const Graph& g, const VertexSet& s);

/// Vertex permutation, given extensionally.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<Vertex> image);

  static Automorphism identity(std::size_t n);

  std::size_t order() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const noexcept { return image_; }
  Automorphism inverse() const;
  /// (a * b)(v) = a(b(v)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<Vertex> image_;
};

bool verify_automorphism(const Graph& g, const Automorphism& a);
/// Throws NotAutomorphism if a does not preserve adjacency.
void require_automorphism(const Graph& g, const Automorphism& a);
VertexSet apply_automorphism(const Graph& g, const Automorphism& a, const VertexSet& s);

/// Backtracking enumeration of Aut(g), stopping after `limit` elements.
/// Intended for desk-scale graphs.
std::vector<Automorphism> enumerate_automorphisms(const Graph& g, std::size_t limit = 4096);

/// Cartesian (l1) product; vertex (i, j) gets id i * |b| + j.
Graph cartesian_product(const Graph& a, const Graph& b);

/// True iff map is a bijection V(a) -> V(b) preserving adjacency both ways.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map);

}  // namespace medkit
