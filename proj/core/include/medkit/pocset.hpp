#pragma once

#include "medkit/graph.hpp"
#include "medkit/wallspace.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace medkit {

/// Finite poc set: elements with a fixed-point-free complement involution
/// and a partial order reversed by complementation. Elements are dense
/// indices; `label` keeps the caller's ids.
class Pocset {
 public:
  using Element = std::uint32_t;
  using Label = std::int64_t;
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  /// Closes `leq` under reflexivity, complement reversal and transitivity,
  /// then checks antisymmetry and that no h is comparable with h*.
  /// Throws InconsistentPocset.
  static Pocset make(std::vector<Label> labels, const std::vector<std::pair<Label, Label>>& complement_pairs,
                     const std::vector<std::pair<Label, Label>>& leq);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t wall_count() const noexcept { return walls_.size(); }
  Label label(Element e) const { return labels_.at(e); }
  Element complement(Element e) const { return complement_.at(e); }
  bool leq(Element a, Element b) const { return leq_.at(a).test(b); }
  /// Elements above a (including a).
  const Bits& up_set(Element a) const { return leq_.at(a); }
  /// Complementary pairs (lower index first), in order of the lower index.
  const std::vector<std::pair<Element, Element>>& walls() const noexcept { return walls_; }

  /// Order relations between distinct elements, as label pairs (no
  /// reflexive entries), sorted.
  std::vector<std::pair<Label, Label>> relations() const;

  /// Sub-pocset on the given walls (indices into walls()), labels kept.
  Pocset restrict(std::span<const std::size_t> wall_indices) const;

 private:
  std::vector<Label> labels_;
  std::vector<Element> complement_;
  std::vector<Bits> leq_;
  std::vector<std::pair<Element, Element>> walls_;
};

/// Halfspaces of the graph ordered by inclusion; labels are halfspace ids.
Pocset pocset_of(const Wallspace& ws);

/// Median graph whose vertices are the consistent orientations of a pocset.
struct DualGraph {
  Graph graph;
  /// orientations[v].test(i) is true when vertex v picks the second element
  /// of walls()[i].
  std::vector<Pocset::Bits> orientations;
};

/// Enumerates consistent orientations by backtracking over walls with
/// forward checking, and joins orientations that differ on one wall.
/// Throws SizeLimit past max_vertices orientations.
DualGraph dual_median_graph(const Pocset& p, std::size_t max_vertices = std::size_t{1} << 14);

/// Map from graph vertices to dual vertices sending v to the orientation
/// {h : v ∈ h}. The dual must come from pocset_of(ws).
std::vector<Vertex> embed_into_dual(const Wallspace& ws, const DualGraph& dual);

}  // namespace medkit
