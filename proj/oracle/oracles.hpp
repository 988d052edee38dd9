#pragma once

// Brute-force reference implementations. They deliberately avoid the
// library's distance matrix, wall decomposition and signatures so that the
// tests compare two independent routes.

#include "medkit/barycenter.hpp"
#include "medkit/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/isomorphism.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using medkit::Graph;
using medkit::Rational;
using medkit::Vertex;
using medkit::VertexSet;

using Matrix = std::vector<std::vector<int>>;

inline Matrix distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Matrix d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : adj[v]) {
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          q.push_back(w);
        }
      }
    }
  }
  return d;
}

inline std::vector<Vertex> interval(const Matrix& d, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex c = 0; c < d.size(); ++c) {
    if (d[a][c] + d[c][b] == d[a][b]) out.push_back(c);
  }
  return out;
}

inline bool in_interval(const Matrix& d, Vertex a, Vertex b, Vertex c) { return d[a][c] + d[c][b] == d[a][b]; }

/// Every point of [x,y] ∩ [y,z] ∩ [x,z].
inline std::vector<Vertex> medians(const Matrix& d, Vertex x, Vertex y, Vertex z) {
  std::vector<Vertex> out;
  for (Vertex c = 0; c < d.size(); ++c) {
    if (in_interval(d, x, y, c) && in_interval(d, y, z, c) && in_interval(d, x, z, c)) out.push_back(c);
  }
  return out;
}

inline bool is_median_graph(const Matrix& d) {
  const Vertex n = static_cast<Vertex>(d.size());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x; y < n; ++y) {
      for (Vertex z = y; z < n; ++z) {
        if (medians(d, x, y, z).size() != 1) return false;
      }
    }
  }
  return true;
}

inline bool is_convex(const Matrix& d, const VertexSet& s) {
  for (Vertex a : s) {
    for (Vertex b : s) {
      for (Vertex c = 0; c < d.size(); ++c) {
        if (in_interval(d, a, b, c) && !s.contains(c)) return false;
      }
    }
  }
  return true;
}

/// Halfspaces as the distinct sets W(u, v) = {x : d(x,u) < d(x,v)} over
/// oriented edges uv. Sorted.
inline std::vector<VertexSet> halfspaces(const Graph& g, const Matrix& d) {
  std::set<VertexSet> found;
  for (const auto& e : g.edges()) {
    for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      VertexSet w(g.order());
      for (Vertex x = 0; x < g.order(); ++x) {
        if (d[x][u] < d[x][v]) w.insert(x);
      }
      found.insert(w);
    }
  }
  return {found.begin(), found.end()};
}

/// Intersection of all halfspaces containing s: the convex hull, by walls.
inline VertexSet hull_by_halfspaces(const std::vector<VertexSet>& hs, const VertexSet& s) {
  VertexSet out = VertexSet::full(s.universe());
  for (const auto& h : hs) {
    if (s.is_subset_of(h)) out &= h;
  }
  return out;
}

inline Rational mass(const medkit::ProbMeasure& mu, const VertexSet& s) {
  Rational total = 0;
  for (const auto& [v, w] : mu.weights()) {
    if (s.contains(v)) total += w;
  }
  return total;
}

/// ⋂ {h : μ(h) > 1/2} over the brute-force halfspace list.
inline VertexSet majority_intersection(const std::vector<VertexSet>& hs, const medkit::ProbMeasure& mu) {
  VertexSet out = VertexSet::full(mu.order());
  for (const auto& h : hs) {
    if (mass(mu, h) > Rational(1, 2)) out &= h;
  }
  return out;
}

/// Minimizers of v -> Σ μ(u) d(u, v).
inline VertexSet weber_minimizers(const Matrix& d, const medkit::ProbMeasure& mu) {
  std::vector<Rational> cost(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    for (const auto& [u, w] : mu.weights()) cost[v] += w * d[u][v];
  }
  const Rational best = *std::min_element(cost.begin(), cost.end());
  VertexSet out(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    if (cost[v] == best) out.insert(v);
  }
  return out;
}

inline int set_distance(const Matrix& d, const VertexSet& a, const VertexSet& b) {
  int best = std::numeric_limits<int>::max();
  for (Vertex x : a) {
    for (Vertex y : b) best = std::min(best, d[x][y]);
  }
  return best;
}

/// max over x ∈ K of d(x, h^c).
inline int depth(const Matrix& d, const VertexSet& k, const VertexSet& h) {
  const VertexSet outside = h.complement();
  int best = 0;
  for (Vertex x : k) best = std::max(best, set_distance(d, VertexSet::singleton(k.universe(), x), outside));
  return best;
}

/// Vertices of `within` minimizing max over K of the distance.
inline VertexSet eccentricity_minimizers(const Matrix& d, const VertexSet& k, const VertexSet& within) {
  int best = std::numeric_limits<int>::max();
  VertexSet out(k.universe());
  for (Vertex v : within) {
    int ecc = 0;
    for (Vertex x : k) ecc = std::max(ecc, d[v][x]);
    if (ecc < best) {
      best = ecc;
      out = VertexSet(k.universe());
    }
    if (ecc == best) out.insert(v);
  }
  return out;
}

/// All four quadrants nonempty.
inline bool transverse(const VertexSet& a, const VertexSet& b) {
  const VertexSet ac = a.complement(), bc = b.complement();
  return a.intersects(b) && a.intersects(bc) && ac.intersects(b) && ac.intersects(bc);
}

inline bool strongly_separated(const std::vector<VertexSet>& hs, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) return false;
  for (const auto& h : hs) {
    if (transverse(h, a) && transverse(h, b)) return false;
  }
  return true;
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

inline BoostGraph to_boost(const Graph& g) {
  BoostGraph b(g.order());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, b);
  return b;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edges().size() != b.edges().size()) return false;
  return boost::isomorphism(to_boost(a), to_boost(b));
}

/// Deterministic test-side randomness.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return engine_() & 1; }

  VertexSet subset(std::size_t n, std::size_t max_size) {
    VertexSet s(n);
    const std::size_t size = 1 + below(std::min(max_size, n));
    while (s.size() < size) s.insert(static_cast<Vertex>(below(n)));
    return s;
  }

  /// Support of at most `max_support` vertices, positive integer weights.
  medkit::ProbMeasure measure(std::size_t n, std::size_t max_support) {
    const VertexSet support = subset(n, max_support);
    std::vector<std::pair<Vertex, Rational>> raw;
    Rational total = 0;
    for (Vertex v : support) {
      Rational w(static_cast<long long>(1 + below(12)));
      raw.emplace_back(v, w);
      total += w;
    }
    for (auto& entry : raw) entry.second /= total;
    return medkit::ProbMeasure::make(n, raw);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
