#include "medkit/wallspace.hpp"

#include "medkit/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace medkit {

namespace {

std::uint64_t hash_words(std::span<const std::uint64_t> words) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::string edge_text(const Edge& e) { return "[" + std::to_string(e.u) + ", " + std::to_string(e.v) + "]"; }

}  // namespace

Wallspace::Wallspace(Graph graph) : graph_(std::move(graph)) {
  const auto& d = graph_.distances();
  const auto& edges = graph_.edges();
  const std::size_t m = edges.size();

  auto theta = [&](const Edge& e, const Edge& f) {
    return d(e.u, f.u) + d(e.v, f.v) != d(e.u, f.v) + d(e.v, f.u);
  };

  DisjointSets classes(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (theta(edges[i], edges[j])) classes.unite(i, j);
    }
  }

  // Root of each class is its lowest edge index, so walls come out ordered
  // by representative edge.
  std::vector<std::size_t> wall_of_root(m, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t root = classes.find(i);
    if (wall_of_root[root] == std::numeric_limits<std::size_t>::max()) {
      wall_of_root[root] = walls_.size();
      Wall w;
      w.id = static_cast<WallId>(walls_.size());
      w.representative = edges[i];
      walls_.push_back(std::move(w));
    }
    walls_[wall_of_root[root]].edges.push_back(edges[i]);
  }

  const std::size_t n = graph_.order();
  for (Wall& w : walls_) {
    for (std::size_t a = 0; a < w.edges.size(); ++a) {
      for (std::size_t b = a + 1; b < w.edges.size(); ++b) {
        if (!theta(w.edges[a], w.edges[b])) {
          throw Error(ErrorKind::ThetaNotTransitive,
                      "edges " + edge_text(w.edges[a]) + " and " + edge_text(w.edges[b]) +
                          " share a class but are not related");
        }
      }
    }
    const Vertex x = w.representative.u, y = w.representative.v;
    w.sides = {VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) {
      if (d(v, x) < d(v, y)) {
        w.sides[0].insert(v);
      } else if (d(v, y) < d(v, x)) {
        w.sides[1].insert(v);
      } else {
        throw Error(ErrorKind::ThetaNotTransitive,
                    "vertex " + std::to_string(v) + " is equidistant from edge " + edge_text(w.representative));
      }
    }
  }

  // Each class must be exactly the edge cut between its two sides.
  for (std::size_t i = 0; i < m; ++i) {
    const Wall& w = walls_[wall_of_root[classes.find(i)]];
    for (const Wall& other : walls_) {
      bool crosses = other.sides[0].contains(edges[i].u) != other.sides[0].contains(edges[i].v);
      if (crosses != (other.id == w.id)) {
        throw Error(ErrorKind::ThetaNotTransitive,
                    "edge " + edge_text(edges[i]) + " does not match the cut of wall " + std::to_string(other.id));
      }
    }
  }

  const std::size_t walls = walls_.size();
  words_ = std::max<std::size_t>(1, (walls + 63) / 64);
  signatures_.assign(n * words_, 0);
  for (const Wall& w : walls_) {
    for (Vertex v : w.sides[1]) signatures_[v * words_ + w.id / 64] |= std::uint64_t{1} << (w.id % 64);
  }
  for (Vertex v = 0; v < n; ++v) by_signature_hash_[hash_words(signature(v))].push_back(v);

  transverse_.assign(walls, boost::dynamic_bitset<std::uint64_t>(walls));
  for (WallId a = 0; a < walls; ++a) {
    for (WallId b = a + 1; b < walls; ++b) {
      unsigned quadrants = 0;
      for (Vertex v = 0; v < n && quadrants != 0xF; ++v) {
        quadrants |= 1U << (2 * side_of(v, a) + side_of(v, b));
      }
      if (quadrants == 0xF) {
        transverse_[a].set(b);
        transverse_[b].set(a);
      }
    }
  }
}

std::vector<Halfspace> Wallspace::halfspaces() const {
  std::vector<Halfspace> out;
  out.reserve(halfspace_count());
  for (std::uint32_t id = 0; id < halfspace_count(); ++id) out.push_back(Halfspace::from_id(id));
  return out;
}

std::uint8_t Wallspace::side_of(Vertex v, WallId w) const {
  return static_cast<std::uint8_t>((signatures_[v * words_ + w / 64] >> (w % 64)) & 1U);
}

std::span<const std::uint64_t> Wallspace::signature(Vertex v) const {
  return {signatures_.data() + v * words_, words_};
}

bool Wallspace::strongly_separated(Halfspace a, Halfspace b) const {
  if (!disjoint(a, b)) {
    throw Error(ErrorKind::NotDisjoint,
                "halfspaces " + std::to_string(a.id()) + " and " + std::to_string(b.id()) + " intersect");
  }
  return !transverse_[a.wall].intersects(transverse_[b.wall]);
}

std::uint32_t Wallspace::distance(Halfspace a, Halfspace b) const {
  const VertexSet& from = vertices(a);
  const VertexSet& to = vertices(b);
  if (from.intersects(to)) return 0;
  // Multi-source BFS from `from` until `to` is reached.
  std::vector<std::uint32_t> level(order(), std::numeric_limits<std::uint32_t>::max());
  std::vector<Vertex> frontier = from.to_vector();
  for (Vertex v : frontier) level[v] = 0;
  for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex w : graph_.neighbors(u)) {
        if (level[w] != std::numeric_limits<std::uint32_t>::max()) continue;
        if (to.contains(w)) return depth;
        level[w] = depth;
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return std::numeric_limits<std::uint32_t>::max();
}

std::optional<Vertex> Wallspace::vertex_with_signature(std::span<const std::uint64_t> words) const {
  auto it = by_signature_hash_.find(hash_words(words));
  if (it == by_signature_hash_.end()) return std::nullopt;
  for (Vertex v : it->second) {
    if (std::equal(words.begin(), words.end(), signature(v).begin())) return v;
  }
  return std::nullopt;
}

Vertex Wallspace::median(Vertex x, Vertex y, Vertex z) const {
  std::vector<std::uint64_t> vote(words_);
  auto a = signature(x), b = signature(y), c = signature(z);
  for (std::size_t i = 0; i < words_; ++i) vote[i] = (a[i] & b[i]) | (c[i] & (a[i] | b[i]));
  if (auto v = vertex_with_signature(vote)) return *v;
  throw Error(ErrorKind::NotMedian, "majority orientation of (" + std::to_string(x) + ", " + std::to_string(y) +
                                        ", " + std::to_string(z) + ") is not a vertex");
}

std::optional<Halfspace> Wallspace::find_halfspace(const VertexSet& s) const {
  if (s.universe() != order()) return std::nullopt;
  for (const Wall& w : walls_) {
    for (std::uint8_t side = 0; side < 2; ++side) {
      if (w.sides[side] == s) return Halfspace{w.id, side};
    }
  }
  return std::nullopt;
}

std::vector<Halfspace> halfspaces_between(const Wallspace& ws, const VertexSet& a, const VertexSet& b) {
  std::vector<Halfspace> out;
  for (Halfspace h : ws.halfspaces()) {
    const VertexSet& side = ws.vertices(h);
    if (b.is_subset_of(side) && !a.intersects(side)) out.push_back(h);
  }
  return out;
}

std::vector<WallId> maximum_transverse_family(const Wallspace& ws) {
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  const std::size_t walls = ws.wall_count();
  std::vector<WallId> best, current;

  // Bron–Kerbosch with Tomita pivoting.
  auto expand = [&](auto&& self, Bits candidates, Bits excluded) -> void {
    if (candidates.none()) {
      if (excluded.none() && current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + candidates.count() <= best.size()) return;
    Bits pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t pivot_degree = 0;
    for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
      std::size_t degree = (candidates & ws.transverse_row(static_cast<WallId>(u))).count();
      if (degree >= pivot_degree) {
        pivot_degree = degree;
        pivot = u;
      }
    }
    Bits branch = candidates - ws.transverse_row(static_cast<WallId>(pivot));
    for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
      const Bits& row = ws.transverse_row(static_cast<WallId>(v));
      current.push_back(static_cast<WallId>(v));
      self(self, candidates & row, excluded & row);
      current.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  };
  Bits all(walls);
  all.set();
  expand(expand, all, Bits(walls));
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t rank(const Wallspace& ws) { return maximum_transverse_family(ws).size(); }

Halfspace separate(const Wallspace& ws, const VertexSet& c1, const VertexSet& c2) {
  const Graph& g = ws.graph();
  if (c1.empty() || c2.empty()) throw Error(ErrorKind::EmptySet, "separate needs nonempty sets");
  if (c1.intersects(c2)) throw Error(ErrorKind::NotDisjoint, "sets to separate intersect");
  if (!is_convex(g, c1)) throw Error(ErrorKind::NotConvex, "first set is not convex");
  if (!is_convex(g, c2)) throw Error(ErrorKind::NotConvex, "second set is not convex");
  std::optional<Halfspace> best;
  for (Halfspace h : ws.halfspaces()) {
    const VertexSet& side = ws.vertices(h);
    if (!c2.is_subset_of(side) || c1.intersects(side)) continue;
    if (!best || ws.cardinality(h) < ws.cardinality(*best)) best = h;
  }
  if (!best) throw Error(ErrorKind::NotMedian, "no halfspace separates the two convex sets");
  return *best;
}

std::vector<Halfspace> fundamental_family(const Wallspace& ws) {
  const Graph& g = ws.graph();
  const auto all = ws.halfspaces();
  std::vector<bool> chosen(ws.halfspace_count(), false);
  std::vector<Halfspace> containing;
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto row = g.distances().row(x);
    for (std::uint16_t r = 0; r <= g.diameter(); ++r) {
      VertexSet ball(g.order());
      for (Vertex v = 0; v < g.order(); ++v) {
        if (row[v] <= r) ball.insert(v);
      }
      // Halfspaces are convex, so containing the ball is the same as
      // containing its convex hull.
      containing.clear();
      for (Halfspace h : all) {
        if (ball.is_subset_of(ws.vertices(h))) containing.push_back(h);
      }
      for (Halfspace h : containing) {
        bool minimal = std::none_of(containing.begin(), containing.end(), [&](Halfspace k) {
          return k != h && ws.nested(k, h);
        });
        if (minimal) chosen[h.id()] = true;
      }
    }
  }
  std::vector<Halfspace> out;
  for (Halfspace h : all) {
    if (chosen[h.id()]) out.push_back(h);
  }
  return out;
}

FamilyCheck verify_fundamental_family(const Wallspace& ws, std::span<const Halfspace> family) {
  FamilyCheck check;
  const std::size_t n = ws.order();
  for (Vertex x = 0; x < n && check.separates_pairs; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = std::any_of(family.begin(), family.end(),
                               [&](Halfspace h) { return ws.contains(h, y) && !ws.contains(h, x); });
      if (!found) {
        check.separates_pairs = false;
        check.unseparated_pair = std::pair{x, y};
        break;
      }
    }
  }
  for (Halfspace h : ws.halfspaces()) {
    bool covered = std::any_of(family.begin(), family.end(), [&](Halfspace k) { return ws.nested(h, k); });
    if (!covered) {
      check.covers_halfspaces = false;
      check.uncovered = h;
      break;
    }
  }
  return check;
}

Halfspace image(const Wallspace& ws, const Automorphism& g, Halfspace h) {
  VertexSet moved = apply_automorphism(ws.graph(), g, ws.vertices(h));
  auto found = ws.find_halfspace(moved);
  if (!found) throw Error(ErrorKind::NotAutomorphism, "image of a halfspace is not a halfspace");
  return *found;
}

bool flips(const Wallspace& ws, const Automorphism& g, Halfspace h) {
  VertexSet moved = apply_automorphism(ws.graph(), g, ws.vertices(h));
  return moved.is_subset_of(ws.vertices(h.complement()));
}

}  // namespace medkit
