#include "medkit/centroid.hpp"

#include "medkit/error.hpp"

#include <algorithm>
#include <string>

namespace medkit {

namespace {

void require_nonempty(const Wallspace& ws, const VertexSet& k) {
  if (k.universe() != ws.order()) {
    throw Error(ErrorKind::InvalidGraph, "vertex set over " + std::to_string(k.universe()) +
                                             " vertices used on a graph with " + std::to_string(ws.order()));
  }
  if (k.empty()) throw Error(ErrorKind::EmptySet, "depth needs a nonempty set");
}

/// max over x ∈ K of d(x, side^c). A shortest path leaving `side` ends with
/// an edge of the wall, so d(x, side^c) = 1 + min d(x, u) over wall edges
/// uv with u on this side.
std::uint32_t wall_depth(const Wallspace& ws, const Wall& wall, std::uint8_t side, const VertexSet& k) {
  const Graph& g = ws.graph();
  std::uint32_t best = 0;
  for (Vertex x : k) {
    if (!wall.sides[side].contains(x)) continue;
    std::uint32_t nearest = ~std::uint32_t{0};
    for (const Edge& e : wall.edges) {
      const Vertex inner = wall.sides[side].contains(e.u) ? e.u : e.v;
      nearest = std::min<std::uint32_t>(nearest, g.distance(x, inner) + 1U);
    }
    best = std::max(best, nearest);
  }
  return best;
}

}  // namespace

std::uint32_t depth(const Wallspace& ws, const VertexSet& k, Halfspace h) {
  require_nonempty(ws, k);
  return wall_depth(ws, ws.wall(h.wall), h.side, k);
}

DepthProfile depth_profile(const Wallspace& ws, const VertexSet& k) {
  require_nonempty(ws, k);
  DepthProfile profile;
  profile.depths.reserve(ws.wall_count());
  for (WallId w = 0; w < ws.wall_count(); ++w) {
    const Wall& wall = ws.wall(w);
    profile.depths.push_back({wall_depth(ws, wall, 0, k), wall_depth(ws, wall, 1, k)});
  }
  return profile;
}

namespace {

std::vector<Halfspace> select(const DepthProfile& profile, bool strict) {
  std::vector<Halfspace> out;
  for (WallId w = 0; w < profile.depths.size(); ++w) {
    const auto [d0, d1] = profile.depths[w];
    if (strict ? d0 > d1 : d0 >= d1) out.push_back({w, 0});
    if (strict ? d1 > d0 : d1 >= d0) out.push_back({w, 1});
  }
  return out;
}

}  // namespace

std::vector<Halfspace> majority_depth_halfspaces(const Wallspace& ws, const VertexSet& k, bool strict) {
  return select(depth_profile(ws, k), strict);
}

CentroidReport centroid_report(const Wallspace& ws, const VertexSet& k) {
  CentroidReport r{k, depth_profile(ws, k), convex_hull(ws.graph(), k), {}, {}, VertexSet::full(ws.order()), false,
                   VertexSet(ws.order())};
  r.strict = select(r.profile, true);
  r.non_strict = select(r.profile, false);
  for (Halfspace h : r.non_strict) r.non_strict_raw &= ws.vertices(h);
  r.non_strict_empty = r.non_strict_raw.empty();
  r.centroid = r.hull;
  for (Halfspace h : r.strict) r.centroid &= ws.vertices(h);
  return r;
}

VertexSet centroid(const Wallspace& ws, const VertexSet& k) { return centroid_report(ws, k).centroid; }

}  // namespace medkit
