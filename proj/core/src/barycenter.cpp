#include "medkit/barycenter.hpp"

#include "medkit/error.hpp"

#include <string>

namespace medkit {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidMeasure, what); }

void require_order(const Wallspace& ws, const ProbMeasure& mu) {
  if (mu.order() != ws.order()) {
    invalid("measure on " + std::to_string(mu.order()) + " vertices used on a graph with " +
            std::to_string(ws.order()));
  }
}

/// μ(side 1) for every wall.
std::vector<Rational> side_one_mass(const Wallspace& ws, const ProbMeasure& mu) {
  std::vector<Rational> mass(ws.wall_count());
  for (const auto& [v, w] : mu.weights()) {
    for (WallId k = 0; k < ws.wall_count(); ++k) {
      if (ws.side_of(v, k) == 1) mass[k] += w;
    }
  }
  return mass;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Mask over walls: bit set when the wall is balanced.
std::vector<std::uint64_t> balanced_mask(const Wallspace& ws, const std::vector<Rational>& mass) {
  const Rational half(1, 2);
  std::vector<std::uint64_t> mask(ws.signature_words(), 0);
  for (WallId k = 0; k < ws.wall_count(); ++k) {
    if (mass[k] == half) mask[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  return mask;
}

bool only_balanced_between(const Wallspace& ws, const std::vector<std::uint64_t>& mask, Vertex x, Vertex y) {
  const auto sx = ws.signature(x), sy = ws.signature(y);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if ((sx[i] ^ sy[i]) & ~mask[i]) return false;
  }
  return true;
}

}  // namespace

ProbMeasure ProbMeasure::make(std::size_t order, const std::vector<std::pair<Vertex, Rational>>& weights) {
  ProbMeasure mu;
  mu.order_ = order;
  Rational total = 0;
  for (const auto& [v, w] : weights) {
    if (v >= order) invalid("vertex " + std::to_string(v) + " out of range");
    if (w < 0) invalid("negative weight at vertex " + std::to_string(v));
    if (mu.weights_.count(v)) invalid("vertex " + std::to_string(v) + " listed twice");
    total += w;
    if (w != 0) mu.weights_.emplace(v, w);
  }
  if (total != 1) invalid("total mass is " + total.str() + ", not 1");
  return mu;
}

ProbMeasure ProbMeasure::dirac(std::size_t order, Vertex v) { return make(order, {{v, Rational(1)}}); }

ProbMeasure ProbMeasure::uniform(const VertexSet& support) {
  if (support.empty()) throw Error(ErrorKind::EmptySet, "uniform measure on an empty set");
  const Rational w(1, support.size());
  std::vector<std::pair<Vertex, Rational>> weights;
  for (Vertex v : support) weights.emplace_back(v, w);
  return make(support.universe(), weights);
}

Rational ProbMeasure::weight(Vertex v) const {
  auto it = weights_.find(v);
  return it == weights_.end() ? Rational(0) : it->second;
}

VertexSet ProbMeasure::support() const {
  VertexSet s(order_);
  for (const auto& entry : weights_) s.insert(entry.first);
  return s;
}

Rational ev(const ProbMeasure& mu, const VertexSet& s) {
  Rational total = 0;
  for (const auto& [v, w] : mu.weights()) {
    if (v < s.universe() && s.contains(v)) total += w;
  }
  return total;
}

Rational ev(const Wallspace& ws, const ProbMeasure& mu, Halfspace h) {
  require_order(ws, mu);
  return ev(mu, ws.vertices(h));
}

BarycenterResult center_of_mass(const Wallspace& ws, const ProbMeasure& mu) {
  require_order(ws, mu);
  const Rational half(1, 2);
  const auto mass = side_one_mass(ws, mu);
  BarycenterResult out{VertexSet::full(ws.order()), false, {}, {}};
  for (WallId k = 0; k < ws.wall_count(); ++k) {
    if (mass[k] == half) {
      out.balanced.push_back({k, 0});
      out.balanced.push_back({k, 1});
      continue;
    }
    Halfspace h{k, static_cast<std::uint8_t>(mass[k] > half ? 1 : 0)};
    out.majority.push_back(h);
    out.center &= ws.vertices(h);
  }
  out.singleton = out.center.size() == 1;
  return out;
}

SingletonCriterion singleton_criterion(const Wallspace& ws, const ProbMeasure& mu) {
  require_order(ws, mu);
  const auto mask = balanced_mask(ws, side_one_mass(ws, mu));
  SingletonCriterion out;
  for (Vertex x = 0; x < ws.order(); ++x) {
    for (Vertex y = x + 1; y < ws.order(); ++y) {
      if (only_balanced_between(ws, mask, x, y)) {
        out.singleton = false;
        out.witness = {x, y};
        return out;
      }
    }
  }
  return out;
}

BalancedCheck balanced_transversality_check(const Wallspace& ws, const ProbMeasure& mu) {
  const auto result = center_of_mass(ws, mu);
  const Rational half(1, 2);
  const auto mass = side_one_mass(ws, mu);
  const auto members = result.center.to_vector();
  BalancedCheck out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      for (WallId k = 0; k < ws.wall_count(); ++k) {
        if (ws.side_of(members[i], k) != ws.side_of(members[j], k) && mass[k] != half) {
          out.holds = false;
          out.pair = {members[i], members[j]};
          out.unbalanced = Halfspace{k, ws.side_of(members[j], k)};
          return out;
        }
      }
    }
  }
  return out;
}

PsiValue psi(const Wallspace& ws, const ProbMeasure& mu1, const ProbMeasure& mu2, std::span<const Halfspace> family) {
  require_order(ws, mu1);
  require_order(ws, mu2);
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "no halfspaces to minimize over");
  const auto m1 = side_one_mass(ws, mu1);
  const auto m2 = side_one_mass(ws, mu2);
  std::optional<PsiValue> best;
  for (Halfspace h : family) {
    if (h.wall >= ws.wall_count()) throw Error(ErrorKind::InvalidSpec, "unknown halfspace " + std::to_string(h.id()));
    // |μ(h) − μ(h^c)| = |2μ(side 1) − 1| for either side of the wall.
    Rational v = abs(2 * m1[h.wall] - 1) + abs(2 * m2[h.wall] - 1);
    if (!best || v < best->value) best = PsiValue{v, h};
  }
  return *best;
}

PsiValue psi(const Wallspace& ws, const ProbMeasure& mu1, const ProbMeasure& mu2) {
  const auto all = ws.halfspaces();
  return psi(ws, mu1, mu2, all);
}

ProbMeasure pushforward(const Graph& g, const ProbMeasure& mu, const Automorphism& a) {
  require_automorphism(g, a);
  if (mu.order() != g.order()) invalid("measure and automorphism live on different graphs");
  std::vector<std::pair<Vertex, Rational>> moved;
  for (const auto& [v, w] : mu.weights()) moved.emplace_back(a(v), w);
  return ProbMeasure::make(g.order(), moved);
}

std::optional<Halfspace> concentrated_halfspace(const Wallspace& ws, const ProbMeasure& mu, const Rational& epsilon,
                                                std::span<const Halfspace> family) {
  require_order(ws, mu);
  std::vector<Halfspace> all;
  if (family.empty()) {
    all = ws.halfspaces();
    family = all;
  }
  const Rational threshold = 1 - epsilon;
  for (Halfspace h : family) {
    if (ev(mu, ws.vertices(h)) > threshold) return h;
  }
  return std::nullopt;
}

}  // namespace medkit
