#pragma once

#include "medkit/wallspace.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace medkit {

/// Certificate for one step h -> k of a chain.
struct ChainLink {
  bool nested = false;               ///< k ⊊ h
  bool strongly_separated = false;   ///< h^c and k strongly separated
  std::uint32_t gap = 0;             ///< d(h^c, k)
};

/// Strictly descending halfspaces h_1 ⊋ h_2 ⊋ ... with every step
/// certified strongly separated and spaced by more than r. This is the
/// finite stand-in for a regular boundary direction.
struct Chain {
  std::vector<Halfspace> members;
  std::uint32_t spacing = 0;
  std::vector<ChainLink> links;  ///< links[i] certifies members[i] -> members[i + 1]
};

ChainLink certify_link(const Wallspace& ws, Halfspace outer, Halfspace inner);
bool link_ok(const ChainLink& link, std::uint32_t spacing);

/// Builds the certificates. Throws InvalidChain if any step fails.
Chain make_chain(const Wallspace& ws, std::vector<Halfspace> members, std::uint32_t spacing);
/// Recomputes every certificate from scratch.
bool is_valid_chain(const Wallspace& ws, const Chain& chain);

struct ChainSearch {
  std::vector<Chain> chains;
  /// Enumeration stopped at the cutoff; the list is then a prefix of the
  /// full enumeration, not all chains.
  bool truncated = false;
};

/// Depth-first enumeration of all chains of the given length, in
/// lexicographic order of halfspace ids.
ChainSearch find_chains(const Wallspace& ws, std::uint32_t spacing, std::size_t length,
                        std::size_t cutoff = 10'000);

/// Appends the valid successor with fewest vertices (then lowest id), or
/// returns nullopt when none exists. An empty chain extends to the smallest
/// halfspace. Throws InvalidChain if the input is not valid at `spacing`.
std::optional<Chain> extend_chain(const Wallspace& ws, const Chain& chain, std::uint32_t spacing);

/// Three pairwise disjoint, pairwise strongly separated halfspaces.
struct SeparatedTriple {
  std::array<Halfspace, 3> halfspaces;
};

bool is_separated_triple(const Wallspace& ws, Halfspace a, Halfspace b, Halfspace c);
/// Throws InvalidTriple.
SeparatedTriple make_separated_triple(const Wallspace& ws, Halfspace a, Halfspace b, Halfspace c);
/// All separated triples with ascending ids.
std::vector<SeparatedTriple> separated_triples(const Wallspace& ws);

enum class TripleMethod {
  Automatic,   ///< exhaustive when |h1|·|h2|·|h3| <= 10^6, sampled otherwise
  Exhaustive,  ///< every choice y_i ∈ h_i
  Sampled,     ///< gate images onto ∩ h_i^c plus deterministic random samples
};

struct TripleMedian {
  Vertex median = 0;
  TripleMethod method = TripleMethod::Exhaustive;
  std::uint64_t evaluated = 0;      ///< medians compared
  /// Every triple of gate images onto ∩ h_i^c was checked, which decides
  /// constancy exactly.
  bool gate_certified = false;
};

/// The common value of m(y1, y2, y3) over y_i ∈ h_i. Throws InvalidTriple
/// when the triple is not separated, NotConstant when two choices disagree.
TripleMedian deep_triple_median(const Wallspace& ws, const SeparatedTriple& triple,
                                TripleMethod method = TripleMethod::Automatic);

struct CoreResult {
  VertexSet core;
  VertexSet seeds;                    ///< medians of the constant triples
  std::size_t triples = 0;
  std::size_t non_constant_triples = 0;  ///< skipped, see deep_triple_median
  bool no_regular_directions = false;    ///< no separated triple at all
};

/// Median hull of the deep-triple medians.
CoreResult median_core(const Wallspace& ws);

struct RegularDirectionReport {
  Vertex base = 0;
  std::uint32_t spacing = 0;
  /// levels[p - 1]: halfspaces ending a chain of length p whose first member
  /// avoids the base vertex.
  std::vector<std::vector<Halfspace>> levels;
};

RegularDirectionReport regular_direction_report(const Wallspace& ws, std::uint32_t spacing, Vertex base = 0);

}  // namespace medkit
