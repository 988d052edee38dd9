#pragma once

#include "medkit/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace medkit {

using WallId = std::uint32_t;

/// One side of a wall. Side 0 is the side containing the lower endpoint of
/// the wall's representative edge. The integer id is 2 * wall + side.
struct Halfspace {
  WallId wall = 0;
  std::uint8_t side = 0;

  constexpr std::uint32_t id() const noexcept { return 2 * wall + side; }
  constexpr Halfspace complement() const noexcept { return {wall, static_cast<std::uint8_t>(side ^ 1U)}; }
  static constexpr Halfspace from_id(std::uint32_t id) noexcept {
    return {id / 2, static_cast<std::uint8_t>(id % 2)};
  }

  friend constexpr auto operator<=>(const Halfspace& a, const Halfspace& b) noexcept { return a.id() <=> b.id(); }
  friend constexpr bool operator==(const Halfspace& a, const Halfspace& b) noexcept { return a.id() == b.id(); }
};

struct Wall {
  WallId id = 0;
  std::array<VertexSet, 2> sides;
  /// Lowest-indexed edge of the Djoković–Winkler class.
  Edge representative;
  std::vector<Edge> edges;
};

/// Wall decomposition of a partial cube, computed once from the
/// Djoković–Winkler relation: edges xy and uv are related iff
/// d(x,u) + d(y,v) != d(x,v) + d(y,u). Queries are const and the view is safe
/// to share between threads.
///
/// Construction throws ThetaNotTransitive when the relation is not an
/// equivalence, or its classes are not clean edge cuts; both certify that the
/// input is not a median graph. Every median graph passes, but so do some
/// non-median partial cubes (even cycles), so pair this with is_median_graph
/// when that matters.
class Wallspace {
 public:
  explicit Wallspace(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }

  std::size_t wall_count() const noexcept { return walls_.size(); }
  const std::vector<Wall>& walls() const noexcept { return walls_; }
  const Wall& wall(WallId w) const { return walls_.at(w); }

  std::size_t halfspace_count() const noexcept { return 2 * walls_.size(); }
  std::vector<Halfspace> halfspaces() const;
  const VertexSet& vertices(Halfspace h) const { return walls_.at(h.wall).sides[h.side]; }
  std::size_t cardinality(Halfspace h) const { return vertices(h).size(); }

  /// Side of wall w containing v.
  std::uint8_t side_of(Vertex v, WallId w) const;
  bool contains(Halfspace h, Vertex v) const { return side_of(v, h.wall) == h.side; }
  /// Signature words: bit w is side_of(v, w).
  std::span<const std::uint64_t> signature(Vertex v) const;
  std::size_t signature_words() const noexcept { return words_; }

  bool transverse(WallId a, WallId b) const { return transverse_[a].test(b); }
  bool transverse(Halfspace a, Halfspace b) const { return transverse(a.wall, b.wall); }
  const boost::dynamic_bitset<std::uint64_t>& transverse_row(WallId w) const { return transverse_[w]; }

  bool disjoint(Halfspace a, Halfspace b) const { return !vertices(a).intersects(vertices(b)); }
  /// inner ⊆ outer.
  bool nested(Halfspace inner, Halfspace outer) const { return vertices(inner).is_subset_of(vertices(outer)); }

  /// Disjoint, and no wall is transverse to both. Throws NotDisjoint.
  bool strongly_separated(Halfspace a, Halfspace b) const;

  /// min over a ∈ A, b ∈ B of d(a, b) for the vertex sets of two halfspaces.
  std::uint32_t distance(Halfspace a, Halfspace b) const;

  /// Majority vote over the walls; agrees with medkit::median on median
  /// graphs. Throws NotMedian if the voted signature is not a vertex.
  Vertex median(Vertex x, Vertex y, Vertex z) const;

  std::optional<Halfspace> find_halfspace(const VertexSet& s) const;

  /// Vertex whose signature equals the given words, if any.
  std::optional<Vertex> vertex_with_signature(std::span<const std::uint64_t> words) const;

 private:
  Graph graph_;
  std::vector<Wall> walls_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> signatures_;
  std::vector<boost::dynamic_bitset<std::uint64_t>> transverse_;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> by_signature_hash_;
};

/// H(A, B): every halfspace h with B ⊆ h and A ⊆ h^c, ordered by id.
std::vector<Halfspace> halfspaces_between(const Wallspace& ws, const VertexSet& a, const VertexSet& b);

inline bool transverse(const Wallspace& ws, Halfspace a, Halfspace b) { return ws.transverse(a, b); }
inline bool strongly_separated(const Wallspace& ws, Halfspace a, Halfspace b) { return ws.strongly_separated(a, b); }

/// Size of a maximum pairwise-transverse family of walls (Bron–Kerbosch on
/// the transversality graph). Exponential in the worst case; intended for at
/// most a few dozen walls.
std::size_t rank(const Wallspace& ws);
/// One maximum pairwise-transverse family of walls.
std::vector<WallId> maximum_transverse_family(const Wallspace& ws);

/// Halfspace h with c2 ⊆ h and c1 ⊆ h^c; among all such, the one with fewest
/// vertices, then lowest wall id. Throws NotConvex, NotDisjoint, EmptySet.
Halfspace separate(const Wallspace& ws, const VertexSet& c1, const VertexSet& c2);

/// Union over vertices x and radii r in [0, diam] of the minimal halfspaces
/// containing the convex hull of the ball B(x, r); ordered by id.
std::vector<Halfspace> fundamental_family(const Wallspace& ws);

struct FamilyCheck {
  /// Every ordered pair x != y has a member h with y ∈ h, x ∉ h.
  bool separates_pairs = true;
  /// Every halfspace is contained in some member.
  bool covers_halfspaces = true;
  std::optional<std::pair<Vertex, Vertex>> unseparated_pair;
  std::optional<Halfspace> uncovered;
};

FamilyCheck verify_fundamental_family(const Wallspace& ws, std::span<const Halfspace> family);

/// Image of a halfspace under an automorphism. Throws NotAutomorphism.
Halfspace image(const Wallspace& ws, const Automorphism& g, Halfspace h);

/// g·h ⊆ h^c. Throws NotAutomorphism.
bool flips(const Wallspace& ws, const Automorphism& g, Halfspace h);

}  // namespace medkit
