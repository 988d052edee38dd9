#pragma once

// Random inputs for property checks: convex sets and concentrated measures.

#include "oracles.hpp"

#include "medkit/barycenter.hpp"
#include "medkit/wallspace.hpp"

#include <map>

namespace oracle {

inline VertexSet random_convex(Rng& rng, const medkit::Wallspace& ws) {
  const Graph& g = ws.graph();
  const auto n = g.order();
  switch (rng.below(3)) {
    case 0:
      return medkit::interval(g, rng.below(n), rng.below(n));
    case 1: {
      VertexSet s = VertexSet::full(n);
      const auto cuts = 1 + rng.below(3);
      for (std::size_t i = 0; i < cuts && ws.wall_count() > 0; ++i) {
        const VertexSet& h = ws.vertices(medkit::Halfspace::from_id(rng.below(ws.halfspace_count())));
        if (!s.intersects(h)) break;
        s &= h;
      }
      return s;
    }
    default: {
      // Hull of two or three points near a random centre keeps sets small.
      Vertex c = rng.below(n);
      VertexSet s = VertexSet::singleton(n, c);
      for (int i = 0; i < 2; ++i) {
        Vertex v = c;
        for (int step = 0; step < 3 && n > 1; ++step) {
          auto nb = g.neighbors(v);
          v = nb[rng.below(nb.size())];
        }
        s.insert(v);
      }
      return medkit::convex_hull(g, s);
    }
  }
}

/// Random measure with mass > 1 - eps on h: weight 1 - eps * t (0 <= t < 1)
/// spread over up to three vertices of h, the rest over up to three vertices.
inline medkit::ProbMeasure concentrated(Rng& rng, const medkit::Wallspace& ws, medkit::Halfspace h,
                                        const Rational& eps) {
  const auto inside = ws.vertices(h).to_vector();
  const Rational t(static_cast<long long>(rng.below(100)), 100);
  const Rational in_mass = 1 - eps * t;
  std::map<Vertex, Rational> w;
  auto spread = [&](const std::vector<Vertex>& pool, const Rational& total) {
    if (total == 0) return;
    const std::size_t parts = 1 + rng.below(3);
    std::vector<Rational> raw;
    Rational sum = 0;
    for (std::size_t i = 0; i < parts; ++i) {
      raw.emplace_back(static_cast<long long>(1 + rng.below(9)));
      sum += raw.back();
    }
    for (std::size_t i = 0; i < parts; ++i) w[pool[rng.below(pool.size())]] += total * raw[i] / sum;
  };
  spread(inside, in_mass);
  std::vector<Vertex> all(ws.order());
  for (Vertex v = 0; v < ws.order(); ++v) all[v] = v;
  spread(all, 1 - in_mass);
  return medkit::ProbMeasure::make(ws.order(), {w.begin(), w.end()});
}

}  // namespace oracle
