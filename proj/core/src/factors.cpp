#include "medkit/factors.hpp"

#include "medkit/error.hpp"
#include "medkit/pocset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace medkit {

Factorization irreducible_factors(const Wallspace& ws) {
  const std::size_t walls = ws.wall_count();
  Factorization out;
  if (walls == 0) {
    out.factors.push_back(ws.graph());
    out.wall_groups.emplace_back();
    out.coordinates.assign(ws.order(), std::vector<Vertex>{0});
    return out;
  }

  std::vector<std::size_t> component(walls, walls);
  std::size_t count = 0;
  for (WallId start = 0; start < walls; ++start) {
    if (component[start] != walls) continue;
    std::vector<WallId> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      WallId a = stack.back();
      stack.pop_back();
      for (WallId b = 0; b < walls; ++b) {
        if (b != a && component[b] == walls && !ws.transverse(a, b)) {
          component[b] = count;
          stack.push_back(b);
        }
      }
    }
    ++count;
  }

  const Pocset whole = pocset_of(ws);
  out.wall_groups.resize(count);
  for (WallId w = 0; w < walls; ++w) out.wall_groups[component[w]].push_back(w);
  out.coordinates.assign(ws.order(), std::vector<Vertex>(count));

  for (std::size_t k = 0; k < count; ++k) {
    const auto& group = out.wall_groups[k];
    std::vector<std::size_t> indices(group.begin(), group.end());
    DualGraph dual = dual_median_graph(whole.restrict(indices));

    std::map<std::vector<bool>, Vertex> index;
    for (Vertex v = 0; v < dual.orientations.size(); ++v) {
      std::vector<bool> key(group.size());
      for (std::size_t i = 0; i < group.size(); ++i) key[i] = dual.orientations[v].test(i);
      index.emplace(std::move(key), v);
    }
    for (Vertex v = 0; v < ws.order(); ++v) {
      std::vector<bool> key(group.size());
      for (std::size_t i = 0; i < group.size(); ++i) key[i] = ws.side_of(v, group[i]) == 1;
      auto it = index.find(key);
      if (it == index.end()) throw Error(ErrorKind::NotMedian, "vertex projection missing from a factor");
      out.coordinates[v][k] = it->second;
    }
    out.factors.push_back(std::move(dual.graph));
  }
  return out;
}

Graph product_of(const Factorization& f) {
  Graph result = f.factors.front();
  for (std::size_t k = 1; k < f.factors.size(); ++k) result = cartesian_product(result, f.factors[k]);
  return result;
}

Vertex product_index(const Factorization& f, std::span<const Vertex> coordinates) {
  Vertex index = 0;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    index = static_cast<Vertex>(index * f.factors[k].order() + coordinates[k]);
  }
  return index;
}

bool verify_reconstruction(const Graph& g, const Factorization& f) {
  Graph product = product_of(f);
  std::vector<Vertex> map(g.order());
  for (Vertex v = 0; v < g.order(); ++v) map[v] = product_index(f, f.coordinates[v]);
  return is_isomorphism(g, product, map);
}

}  // namespace medkit
