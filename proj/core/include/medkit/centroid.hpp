#pragma once

#include "medkit/wallspace.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace medkit {

/// max over x ∈ K of d(x, h^c); 0 iff K ⊆ h^c. Throws EmptySet.
std::uint32_t depth(const Wallspace& ws, const VertexSet& k, Halfspace h);

/// depths[w] = {depth_K(side 0 of w), depth_K(side 1 of w)}.
struct DepthProfile {
  std::vector<std::array<std::uint32_t, 2>> depths;
};

DepthProfile depth_profile(const Wallspace& ws, const VertexSet& k);

/// Halfspaces at least as deep in K as their complement (both sides on a
/// tie), or strictly deeper when `strict`. Ordered by id. Throws EmptySet.
std::vector<Halfspace> majority_depth_halfspaces(const Wallspace& ws, const VertexSet& k, bool strict);

struct CentroidReport {
  VertexSet k;
  DepthProfile profile;
  VertexSet hull;
  std::vector<Halfspace> strict;
  std::vector<Halfspace> non_strict;
  /// Intersection of the non-strict family over the whole graph. Shown for
  /// inspection only; it is empty whenever some wall ties.
  VertexSet non_strict_raw;
  bool non_strict_empty = false;
  /// hull(K) ∩ every strict halfspace.
  VertexSet centroid;
};

/// Throws EmptySet for empty K.
CentroidReport centroid_report(const Wallspace& ws, const VertexSet& k);
VertexSet centroid(const Wallspace& ws, const VertexSet& k);

}  // namespace medkit
