#include "medkit/pocset.hpp"

#include "medkit/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace medkit {

namespace {

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::InconsistentPocset, what); }

std::vector<std::uint64_t> words_of(const Pocset::Bits& bits) {
  std::vector<std::uint64_t> out;
  boost::to_block_range(bits, std::back_inserter(out));
  return out;
}

}  // namespace

Pocset Pocset::make(std::vector<Label> labels, const std::vector<std::pair<Label, Label>>& complement_pairs,
                    const std::vector<std::pair<Label, Label>>& leq) {
  Pocset p;
  const std::size_t n = labels.size();
  std::unordered_map<Label, Element> index;
  for (Element e = 0; e < n; ++e) {
    if (!index.emplace(labels[e], e).second) inconsistent("duplicate element " + std::to_string(labels[e]));
  }
  auto lookup = [&](Label l) {
    auto it = index.find(l);
    if (it == index.end()) inconsistent("unknown element " + std::to_string(l));
    return it->second;
  };

  constexpr Element kUnset = ~Element{0};
  p.complement_.assign(n, kUnset);
  for (auto [a, b] : complement_pairs) {
    Element x = lookup(a), y = lookup(b);
    if (x == y) inconsistent("element " + std::to_string(a) + " is its own complement");
    if (p.complement_[x] != kUnset || p.complement_[y] != kUnset) {
      inconsistent("element listed in two complement pairs");
    }
    p.complement_[x] = y;
    p.complement_[y] = x;
  }
  for (Element e = 0; e < n; ++e) {
    if (p.complement_[e] == kUnset) inconsistent("element " + std::to_string(labels[e]) + " has no complement");
  }

  p.leq_.assign(n, Bits(n));
  for (Element e = 0; e < n; ++e) p.leq_[e].set(e);
  for (auto [a, b] : leq) {
    Element x = lookup(a), y = lookup(b);
    p.leq_[x].set(y);
    p.leq_[p.complement_[y]].set(p.complement_[x]);
  }
  // Warshall; the closure of a complement-symmetric relation stays symmetric.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (p.leq_[i].test(k)) p.leq_[i] |= p.leq_[k];
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (p.leq_[a].test(p.complement_[a])) {
      inconsistent("element " + std::to_string(labels[a]) + " lies below its complement");
    }
    for (Element b = a + 1; b < n; ++b) {
      if (p.leq_[a].test(b) && p.leq_[b].test(a)) {
        inconsistent("elements " + std::to_string(labels[a]) + " and " + std::to_string(labels[b]) +
                     " are mutually below each other");
      }
    }
  }
  for (Element e = 0; e < n; ++e) {
    if (e < p.complement_[e]) p.walls_.emplace_back(e, p.complement_[e]);
  }
  p.labels_ = std::move(labels);
  return p;
}

std::vector<std::pair<Pocset::Label, Pocset::Label>> Pocset::relations() const {
  std::vector<std::pair<Label, Label>> out;
  for (Element a = 0; a < size(); ++a) {
    for (auto b = leq_[a].find_first(); b != Bits::npos; b = leq_[a].find_next(b)) {
      if (b != a) out.emplace_back(labels_[a], labels_[b]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pocset Pocset::restrict(std::span<const std::size_t> wall_indices) const {
  std::vector<Label> labels;
  std::vector<std::pair<Label, Label>> pairs;
  std::vector<Element> kept;
  for (std::size_t i : wall_indices) {
    auto [a, b] = walls_.at(i);
    labels.push_back(labels_[a]);
    labels.push_back(labels_[b]);
    pairs.emplace_back(labels_[a], labels_[b]);
    kept.push_back(a);
    kept.push_back(b);
  }
  std::vector<std::pair<Label, Label>> order;
  for (Element a : kept) {
    for (Element b : kept) {
      if (a != b && leq(a, b)) order.emplace_back(labels_[a], labels_[b]);
    }
  }
  return make(std::move(labels), pairs, order);
}

Pocset pocset_of(const Wallspace& ws) {
  std::vector<Pocset::Label> labels;
  std::vector<std::pair<Pocset::Label, Pocset::Label>> pairs;
  std::vector<std::pair<Pocset::Label, Pocset::Label>> order;
  const auto all = ws.halfspaces();
  for (Halfspace h : all) labels.push_back(h.id());
  for (WallId w = 0; w < ws.wall_count(); ++w) pairs.emplace_back(2 * w, 2 * w + 1);
  for (Halfspace a : all) {
    for (Halfspace b : all) {
      if (a != b && ws.nested(a, b)) order.emplace_back(a.id(), b.id());
    }
  }
  return Pocset::make(std::move(labels), pairs, order);
}

DualGraph dual_median_graph(const Pocset& p, std::size_t max_vertices) {
  using Bits = Pocset::Bits;
  const std::size_t n = p.size();
  const auto& walls = p.walls();
  const std::size_t m = walls.size();

  // conflict[e]: elements f that cannot be chosen together with e, i.e. e <= f*.
  std::vector<Bits> conflict(n, Bits(n));
  for (Pocset::Element e = 0; e < n; ++e) {
    const Bits& above = p.up_set(e);
    for (auto f = above.find_first(); f != Bits::npos; f = above.find_next(f)) {
      conflict[e].set(p.complement(static_cast<Pocset::Element>(f)));
    }
  }

  std::vector<Bits> orientations;
  Bits choice(m);
  Bits blocked(n);

  auto search = [&](auto&& self, std::size_t wall) -> void {
    if (wall == m) {
      if (orientations.size() >= max_vertices) {
        throw Error(ErrorKind::SizeLimit, "dual has more than " + std::to_string(max_vertices) + " vertices");
      }
      orientations.push_back(choice);
      return;
    }
    for (int side = 0; side < 2; ++side) {
      Pocset::Element e = side == 0 ? walls[wall].first : walls[wall].second;
      if (blocked.test(e)) continue;
      Bits saved = blocked;
      blocked |= conflict[e];
      bool viable = true;
      for (std::size_t later = wall + 1; later < m && viable; ++later) {
        viable = !(blocked.test(walls[later].first) && blocked.test(walls[later].second));
      }
      if (viable) {
        choice[wall] = side == 1;
        self(self, wall + 1);
      }
      blocked = std::move(saved);
    }
  };
  search(search, 0);

  std::map<std::vector<std::uint64_t>, Vertex> index;
  for (Vertex v = 0; v < orientations.size(); ++v) index.emplace(words_of(orientations[v]), v);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < orientations.size(); ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      Bits flipped = orientations[v];
      flipped.flip(i);
      auto it = index.find(words_of(flipped));
      if (it != index.end() && it->second > v) edges.push_back({v, it->second});
    }
  }
  return DualGraph{Graph(orientations.size(), std::move(edges)), std::move(orientations)};
}

std::vector<Vertex> embed_into_dual(const Wallspace& ws, const DualGraph& dual) {
  std::map<std::vector<std::uint64_t>, Vertex> index;
  for (Vertex v = 0; v < dual.orientations.size(); ++v) index.emplace(words_of(dual.orientations[v]), v);
  std::vector<Vertex> map(ws.order());
  for (Vertex v = 0; v < ws.order(); ++v) {
    Pocset::Bits bits(ws.wall_count());
    for (WallId w = 0; w < ws.wall_count(); ++w) bits[w] = ws.side_of(v, w) == 1;
    auto it = index.find(words_of(bits));
    if (it == index.end()) throw Error(ErrorKind::InconsistentPocset, "vertex orientation missing from the dual");
    map[v] = it->second;
  }
  return map;
}

}  // namespace medkit
