#include "medkit/chains.hpp"

#include "medkit/error.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace medkit {

namespace {

struct Successor {
  Halfspace inner;
  std::uint32_t gap;
};

/// successors[h.id()]: every k forming a valid step h -> k at this spacing.
std::vector<std::vector<Successor>> successor_table(const Wallspace& ws, std::uint32_t spacing) {
  std::vector<std::vector<Successor>> table(ws.halfspace_count());
  const auto all = ws.halfspaces();
  for (Halfspace outer : all) {
    for (Halfspace inner : all) {
      ChainLink link = certify_link(ws, outer, inner);
      if (link_ok(link, spacing)) table[outer.id()].push_back({inner, link.gap});
    }
  }
  return table;
}

std::string chain_text(const std::vector<Halfspace>& members) {
  std::string s = "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(members[i].id());
  }
  return s + "]";
}

/// Projection onto a set known to be convex.
Vertex nearest(const Graph& g, const std::vector<Vertex>& target, Vertex x) {
  const auto row = g.distances().row(x);
  Vertex best = target.front();
  for (Vertex c : target) {
    if (row[c] < row[best]) best = c;
  }
  return best;
}

std::vector<Vertex> gate_images(const Graph& g, const std::vector<Vertex>& target, const VertexSet& from) {
  VertexSet image(g.order());
  for (Vertex y : from) image.insert(nearest(g, target, y));
  return image.to_vector();
}

[[noreturn]] void not_constant(const SeparatedTriple& t, Vertex a, Vertex b) {
  throw Error(ErrorKind::NotConstant, "triple (" + std::to_string(t.halfspaces[0].id()) + ", " +
                                          std::to_string(t.halfspaces[1].id()) + ", " +
                                          std::to_string(t.halfspaces[2].id()) + ") has medians " +
                                          std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

ChainLink certify_link(const Wallspace& ws, Halfspace outer, Halfspace inner) {
  ChainLink link;
  link.nested = outer != inner && ws.nested(inner, outer);
  if (!link.nested) return link;
  const Halfspace outside = outer.complement();
  link.strongly_separated = ws.strongly_separated(outside, inner);
  link.gap = ws.distance(outside, inner);
  return link;
}

bool link_ok(const ChainLink& link, std::uint32_t spacing) {
  return link.nested && link.strongly_separated && link.gap > spacing;
}

Chain make_chain(const Wallspace& ws, std::vector<Halfspace> members, std::uint32_t spacing) {
  Chain chain{std::move(members), spacing, {}};
  for (Halfspace h : chain.members) {
    if (h.wall >= ws.wall_count()) throw Error(ErrorKind::InvalidChain, "unknown halfspace " + std::to_string(h.id()));
  }
  for (std::size_t i = 0; i + 1 < chain.members.size(); ++i) {
    ChainLink link = certify_link(ws, chain.members[i], chain.members[i + 1]);
    if (!link_ok(link, spacing)) {
      throw Error(ErrorKind::InvalidChain, "step " + std::to_string(i) + " of " + chain_text(chain.members) +
                                               " fails at spacing " + std::to_string(spacing));
    }
    chain.links.push_back(link);
  }
  return chain;
}

bool is_valid_chain(const Wallspace& ws, const Chain& chain) {
  if (chain.links.size() + 1 != std::max<std::size_t>(chain.members.size(), 1)) return false;
  for (std::size_t i = 0; i + 1 < chain.members.size(); ++i) {
    ChainLink link = certify_link(ws, chain.members[i], chain.members[i + 1]);
    if (!link_ok(link, chain.spacing) || link.gap != chain.links[i].gap) return false;
  }
  return true;
}

ChainSearch find_chains(const Wallspace& ws, std::uint32_t spacing, std::size_t length, std::size_t cutoff) {
  ChainSearch out;
  if (length == 0) return out;
  const auto table = successor_table(ws, spacing);
  std::vector<Halfspace> path;
  std::vector<ChainLink> links;

  auto descend = [&](auto&& self) -> bool {
    if (path.size() == length) {
      if (out.chains.size() == cutoff) {
        out.truncated = true;
        return false;
      }
      out.chains.push_back(Chain{path, spacing, links});
      return true;
    }
    for (const Successor& next : table[path.back().id()]) {
      path.push_back(next.inner);
      links.push_back({true, true, next.gap});
      bool more = self(self);
      path.pop_back();
      links.pop_back();
      if (!more) return false;
    }
    return true;
  };
  for (Halfspace start : ws.halfspaces()) {
    path.assign(1, start);
    if (!descend(descend)) break;
  }
  return out;
}

std::optional<Chain> extend_chain(const Wallspace& ws, const Chain& chain, std::uint32_t spacing) {
  Chain valid = make_chain(ws, chain.members, spacing);
  std::optional<Halfspace> best;
  std::uint32_t best_gap = 0;
  auto better = [&](Halfspace h) { return !best || ws.cardinality(h) < ws.cardinality(*best); };
  if (valid.members.empty()) {
    for (Halfspace h : ws.halfspaces()) {
      if (better(h)) best = h;
    }
    if (!best) return std::nullopt;
    valid.members.push_back(*best);
    return valid;
  }
  const Halfspace last = valid.members.back();
  for (Halfspace h : ws.halfspaces()) {
    ChainLink link = certify_link(ws, last, h);
    if (link_ok(link, spacing) && better(h)) {
      best = h;
      best_gap = link.gap;
    }
  }
  if (!best) return std::nullopt;
  valid.members.push_back(*best);
  valid.links.push_back({true, true, best_gap});
  return valid;
}

bool is_separated_triple(const Wallspace& ws, Halfspace a, Halfspace b, Halfspace c) {
  const std::array<std::pair<Halfspace, Halfspace>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
  for (auto [x, y] : pairs) {
    if (x.wall >= ws.wall_count() || y.wall >= ws.wall_count()) return false;
    if (!ws.disjoint(x, y) || !ws.strongly_separated(x, y)) return false;
  }
  return true;
}

SeparatedTriple make_separated_triple(const Wallspace& ws, Halfspace a, Halfspace b, Halfspace c) {
  if (!is_separated_triple(ws, a, b, c)) {
    throw Error(ErrorKind::InvalidTriple, "halfspaces " + std::to_string(a.id()) + ", " + std::to_string(b.id()) +
                                              ", " + std::to_string(c.id()) +
                                              " are not pairwise disjoint and strongly separated");
  }
  return SeparatedTriple{{a, b, c}};
}

std::vector<SeparatedTriple> separated_triples(const Wallspace& ws) {
  const std::size_t count = ws.halfspace_count();
  std::vector<std::vector<bool>> ok(count, std::vector<bool>(count, false));
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      Halfspace x = Halfspace::from_id(a), y = Halfspace::from_id(b);
      ok[a][b] = ok[b][a] = ws.disjoint(x, y) && ws.strongly_separated(x, y);
    }
  }
  std::vector<SeparatedTriple> out;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      if (!ok[a][b]) continue;
      for (std::uint32_t c = b + 1; c < count; ++c) {
        if (ok[a][c] && ok[b][c]) {
          out.push_back({{Halfspace::from_id(a), Halfspace::from_id(b), Halfspace::from_id(c)}});
        }
      }
    }
  }
  return out;
}

TripleMedian deep_triple_median(const Wallspace& ws, const SeparatedTriple& triple, TripleMethod method) {
  const auto& [h1, h2, h3] = triple.halfspaces;
  if (!is_separated_triple(ws, h1, h2, h3)) {
    throw Error(ErrorKind::InvalidTriple, "deep_triple_median needs a separated triple");
  }
  const auto a = ws.vertices(h1).to_vector();
  const auto b = ws.vertices(h2).to_vector();
  const auto c = ws.vertices(h3).to_vector();
  const std::uint64_t product = std::uint64_t{a.size()} * b.size() * c.size();
  if (method == TripleMethod::Automatic) {
    method = product <= 1'000'000 ? TripleMethod::Exhaustive : TripleMethod::Sampled;
  }

  TripleMedian out;
  out.method = method;
  out.median = ws.median(a.front(), b.front(), c.front());
  const std::size_t words = ws.signature_words();
  const auto reference = ws.signature(out.median);

  if (method == TripleMethod::Exhaustive) {
    std::vector<std::uint64_t> both(words), either(words);
    for (Vertex x : a) {
      const auto sx = ws.signature(x);
      for (Vertex y : b) {
        const auto sy = ws.signature(y);
        for (std::size_t i = 0; i < words; ++i) {
          both[i] = sx[i] & sy[i];
          either[i] = sx[i] | sy[i];
        }
        for (Vertex z : c) {
          const auto sz = ws.signature(z);
          for (std::size_t i = 0; i < words; ++i) {
            if ((both[i] | (sz[i] & either[i])) != reference[i]) not_constant(triple, out.median, ws.median(x, y, z));
          }
        }
      }
    }
    out.evaluated = product;
    return out;
  }

  // Every median of the triple lies in C = ∩ h_i^c and projecting onto C
  // commutes with medians, so m(y1, y2, y3) = m(π y1, π y2, π y3). Checking
  // all triples of gate images is therefore exact, and usually tiny.
  const Graph& g = ws.graph();
  const VertexSet outside =
      ws.vertices(h1.complement()) & ws.vertices(h2.complement()) & ws.vertices(h3.complement());
  const auto target = outside.to_vector();
  const auto p1 = gate_images(g, target, ws.vertices(h1));
  const auto p2 = gate_images(g, target, ws.vertices(h2));
  const auto p3 = gate_images(g, target, ws.vertices(h3));
  if (std::uint64_t{p1.size()} * p2.size() * p3.size() <= 1'000'000) {
    for (Vertex x : p1) {
      for (Vertex y : p2) {
        for (Vertex z : p3) {
          Vertex m = ws.median(x, y, z);
          if (m != out.median) not_constant(triple, out.median, m);
        }
      }
    }
    out.gate_certified = true;
  }
  std::mt19937_64 rng(0x5eed0000ULL + triple.halfspaces[0].id() * 65537ULL + triple.halfspaces[1].id() * 257ULL +
                      triple.halfspaces[2].id());
  constexpr std::uint64_t kSamples = 4096;
  for (std::uint64_t s = 0; s < kSamples; ++s) {
    Vertex x = a[rng() % a.size()], y = b[rng() % b.size()], z = c[rng() % c.size()];
    Vertex m = ws.median(x, y, z);
    if (m != out.median) not_constant(triple, out.median, m);
  }
  out.evaluated = kSamples;
  return out;
}

CoreResult median_core(const Wallspace& ws) {
  const Graph& g = ws.graph();
  CoreResult out{VertexSet(g.order()), VertexSet(g.order()), 0, 0, false};
  const auto triples = separated_triples(ws);
  out.triples = triples.size();
  out.no_regular_directions = triples.empty();
  for (const SeparatedTriple& t : triples) {
    try {
      out.seeds.insert(deep_triple_median(ws, t).median);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConstant) throw;
      ++out.non_constant_triples;
    }
  }
  out.core = out.seeds.empty() ? out.seeds : median_hull(g, out.seeds);
  return out;
}

RegularDirectionReport regular_direction_report(const Wallspace& ws, std::uint32_t spacing, Vertex base) {
  if (base >= ws.order()) throw Error(ErrorKind::InvalidGraph, "base vertex out of range");
  RegularDirectionReport report{base, spacing, {}};
  const auto table = successor_table(ws, spacing);
  std::vector<Halfspace> level;
  for (Halfspace h : ws.halfspaces()) {
    if (!ws.contains(h, base)) level.push_back(h);
  }
  while (!level.empty()) {
    report.levels.push_back(level);
    std::vector<bool> reached(ws.halfspace_count(), false);
    for (Halfspace h : level) {
      for (const Successor& s : table[h.id()]) reached[s.inner.id()] = true;
    }
    level.clear();
    for (Halfspace h : ws.halfspaces()) {
      if (reached[h.id()]) level.push_back(h);
    }
  }
  return report;
}

}  // namespace medkit
