#include "medkit/graph.hpp"

#include "medkit/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

namespace medkit {

namespace {

std::string triple_text(Vertex x, Vertex y, Vertex z) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
}

bool between(const DistanceMatrix& d, Vertex a, Vertex c, Vertex b) {
  return d(a, c) + d(c, b) == d(a, b);
}

}  // namespace

DistanceMatrix all_pairs_distances(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const Edge& e : edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  DistanceMatrix dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    dist.at(s, s) = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : adjacency[u]) {
        if (dist(s, w) == DistanceMatrix::kUnreachable) {
          dist.at(s, w) = static_cast<std::uint16_t>(dist(s, u) + 1);
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      throw Error(ErrorKind::DisconnectedGraph,
                  "vertex " + std::to_string(s) + " reaches only " + std::to_string(tail) + " of " +
                      std::to_string(n) + " vertices");
    }
  }
  return dist;
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  if (n >= DistanceMatrix::kUnreachable) throw Error(ErrorKind::SizeLimit, "too many vertices");
  for (Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::InvalidGraph,
                  "edge [" + std::to_string(e.u) + ", " + std::to_string(e.v) + "] out of range");
    }
    if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorKind::InvalidGraph,
                "repeated edge [" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + "]");
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  dist_ = all_pairs_distances(n, edges_);
  for (Vertex a = 0; a < n; ++a) {
    auto row = dist_.row(a);
    diameter_ = std::max(diameter_, *std::max_element(row.begin(), row.end()));
  }
}

VertexSet interval(const Graph& g, Vertex a, Vertex b) {
  const auto& d = g.distances();
  VertexSet out(g.order());
  for (Vertex c = 0; c < g.order(); ++c) {
    if (between(d, a, c, b)) out.insert(c);
  }
  return out;
}

Vertex median(const Graph& g, Vertex x, Vertex y, Vertex z) {
  const auto& d = g.distances();
  std::optional<Vertex> found;
  for (Vertex c = 0; c < g.order(); ++c) {
    if (between(d, x, c, y) && between(d, y, c, z) && between(d, x, c, z)) {
      if (found) throw Error(ErrorKind::NotMedian, "several medians for " + triple_text(x, y, z));
      found = c;
    }
  }
  if (!found) throw Error(ErrorKind::NotMedian, "no median for " + triple_text(x, y, z));
  return *found;
}

MedianVerdict is_median_graph(const Graph& g) {
  const std::size_t n = g.order();
  const auto& d = g.distances();
  const std::size_t words = (n + 63) / 64;
  MedianVerdict verdict;

  auto fail = [&](Vertex x, Vertex y, Vertex z, std::size_t count) {
    verdict.is_median = false;
    verdict.witness = std::array<Vertex, 3>{x, y, z};
    verdict.witness_median_count = count;
    return verdict;
  };

  // Interval table as raw words: n * n * words. Fall back to per-triple scans
  // when it would exceed ~64 MiB.
  if (n * n * words * 8 <= (std::size_t{64} << 20)) {
    std::vector<std::uint64_t> table(n * n * words, 0);
    auto row = [&](Vertex a, Vertex b) { return table.data() + (std::size_t{a} * n + b) * words; };
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a; b < n; ++b) {
        std::uint64_t* bits = row(a, b);
        for (Vertex c = 0; c < n; ++c) {
          if (between(d, a, c, b)) bits[c / 64] |= std::uint64_t{1} << (c % 64);
        }
      }
    }
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const std::uint64_t* xy = row(x, y);
        for (Vertex z = y + 1; z < n; ++z) {
          const std::uint64_t* yz = row(y, z);
          const std::uint64_t* xz = row(x, z);
          std::size_t count = 0;
          for (std::size_t w = 0; w < words && count < 2; ++w) {
            count += static_cast<std::size_t>(std::popcount(xy[w] & yz[w] & xz[w]));
          }
          if (count != 1) return fail(x, y, z, count);
        }
      }
    }
    return verdict;
  }

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      for (Vertex z = y + 1; z < n; ++z) {
        std::size_t count = 0;
        for (Vertex c = 0; c < n && count < 2; ++c) {
          if (between(d, x, c, y) && between(d, y, c, z) && between(d, x, c, z)) ++count;
        }
        if (count != 1) return fail(x, y, z, count);
      }
    }
  }
  return verdict;
}

// Both routines use: S is convex iff for all a, b in S every neighbour of a
// one step closer to b lies in S (walk any geodesic from a one edge at a time).

bool is_convex(const Graph& g, const VertexSet& s) {
  const auto& d = g.distances();
  const auto members = s.to_vector();
  for (Vertex a : members) {
    for (Vertex b : members) {
      if (d(a, b) < 2) continue;
      for (Vertex c : g.neighbors(a)) {
        if (d(c, b) + 1 == d(a, b) && !s.contains(c)) return false;
      }
    }
  }
  return true;
}

VertexSet convex_hull(const Graph& g, const VertexSet& s) {
  const auto& d = g.distances();
  VertexSet hull = s;
  std::vector<Vertex> members;
  std::deque<Vertex> pending(s.begin(), s.end());
  auto step_towards = [&](Vertex from, Vertex to) {
    for (Vertex c : g.neighbors(from)) {
      if (d(c, to) + 1 == d(from, to) && !hull.contains(c)) {
        hull.insert(c);
        pending.push_back(c);
      }
    }
  };
  // Each pair is examined in both directions when its later member is popped.
  while (!pending.empty()) {
    Vertex v = pending.front();
    pending.pop_front();
    for (Vertex u : members) {
      if (d(u, v) < 2) continue;
      step_towards(v, u);
      step_towards(u, v);
    }
    members.push_back(v);
  }
  return hull;
}

Gate::Gate(const Graph& g, VertexSet target) : graph_(&g), target_(std::move(target)) {
  if (target_.empty()) throw Error(ErrorKind::EmptySet, "gate onto an empty set");
  if (!is_convex(g, target_)) throw Error(ErrorKind::NotConvex, "gate target is not convex");
  members_ = target_.to_vector();
}

Vertex Gate::operator()(Vertex x) const {
  const auto row = graph_->distances().row(x);
  Vertex best = members_.front();
  for (Vertex c : members_) {
    if (row[c] < row[best]) best = c;
  }
  return best;
}

Vertex gate(const Graph& g, const VertexSet& c, Vertex x) { return Gate(g, c)(x); }

GateImage gate_image(const Graph& g, const VertexSet& c, const VertexSet& c_prime) {
  Gate project(g, c);
  GateImage out{VertexSet(g.order()), c.intersects(c_prime)};
  for (Vertex x : c_prime) out.image.insert(project(x));
  return out;
}

HellyWitness helly_witness(const Graph& g, std::span<const VertexSet> sets) {
  if (sets.empty()) throw Error(ErrorKind::EmptySet, "helly_witness needs at least one set");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw Error(ErrorKind::EmptySet, "set " + std::to_string(i) + " is empty");
    if (!is_convex(g, sets[i])) throw Error(ErrorKind::NotConvex, "set " + std::to_string(i) + " is not convex");
  }
  HellyWitness out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i].intersects(sets[j])) {
        out.disjoint_pair = std::pair{i, j};
        return out;
      }
    }
  }
  VertexSet common = sets.front();
  for (const auto& s : sets.subspan(1)) common &= s;
  if (common.empty()) {
    throw Error(ErrorKind::NotMedian, "pairwise intersecting convex sets with empty intersection");
  }
  out.common = common.first();
  return out;
}

VertexSet median_hull(const Graph& g, const VertexSet& s) {
  VertexSet hull = s;
  std::vector<Vertex> members = s.to_vector();
  std::size_t old_count = 0;
  // Only triples touching a member added in the previous round can be new.
  while (old_count < members.size()) {
    const std::size_t frontier = old_count;
    const std::size_t count = members.size();
    old_count = count;
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        for (std::size_t k = std::max(j + 1, frontier); k < count; ++k) {
          Vertex m = median(g, members[i], members[j], members[k]);
          if (!hull.contains(m)) {
            hull.insert(m);
            members.push_back(m);
          }
        }
      }
    }
  }
  return hull;
}

Automorphism::Automorphism(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || seen[v]) throw Error(ErrorKind::NotAutomorphism, "image is not a permutation");
    seen[v] = true;
  }
}

Automorphism Automorphism::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Automorphism(std::move(image));
}

Automorphism Automorphism::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  return Automorphism(std::move(inv));
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  std::vector<Vertex> image(b.order());
  for (Vertex v = 0; v < b.order(); ++v) image[v] = a(b(v));
  return Automorphism(std::move(image));
}

bool verify_automorphism(const Graph& g, const Automorphism& a) {
  if (a.order() != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(a(e.u), a(e.v))) return false;
  }
  // A permutation mapping edges into edges of a finite graph maps them onto.
  return true;
}

void require_automorphism(const Graph& g, const Automorphism& a) {
  if (!verify_automorphism(g, a)) throw Error(ErrorKind::NotAutomorphism, "permutation does not preserve adjacency");
}

VertexSet apply_automorphism(const Graph& g, const Automorphism& a, const VertexSet& s) {
  require_automorphism(g, a);
  VertexSet out(g.order());
  for (Vertex v : s) out.insert(a(v));
  return out;
}

std::vector<Automorphism> enumerate_automorphisms(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  const auto& d = g.distances();
  // Assign vertices in BFS order so each new vertex has an assigned neighbour.
  std::vector<Vertex> order;
  {
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<Automorphism> out;
  std::vector<Vertex> image(n, 0);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (out.size() >= limit) return;
    if (depth == n) {
      out.emplace_back(image);
      return;
    }
    Vertex v = order[depth];
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || g.neighbors(c).size() != g.neighbors(v).size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        ok = d(order[k], v) == d(image[order[k]], c);
      }
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      self(self, depth + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.order();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a.order(); ++i) {
    for (const Edge& e : b.edges()) {
      edges.push_back({static_cast<Vertex>(i * nb + e.u), static_cast<Vertex>(i * nb + e.v)});
    }
  }
  for (const Edge& e : a.edges()) {
    for (Vertex j = 0; j < nb; ++j) {
      edges.push_back({static_cast<Vertex>(e.u * nb + j), static_cast<Vertex>(e.v * nb + j)});
    }
  }
  return Graph(a.order() * nb, std::move(edges));
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map) {
  if (a.order() != b.order() || a.edges().size() != b.edges().size() || map.size() != a.order()) return false;
  std::vector<bool> seen(b.order(), false);
  for (Vertex v : map) {
    if (v >= b.order() || seen[v]) return false;
    seen[v] = true;
  }
  return std::all_of(a.edges().begin(), a.edges().end(),
                     [&](const Edge& e) { return b.adjacent(map[e.u], map[e.v]); });
}

}  // namespace medkit
