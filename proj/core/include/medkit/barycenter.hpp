#pragma once

#include "medkit/wallspace.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace medkit {

using Rational = boost::multiprecision::cpp_rational;

/// Finitely supported probability measure on the vertices, with exact
/// rational weights. Zero weights are dropped.
class ProbMeasure {
 public:
  /// Throws InvalidMeasure on negative weights, repeated vertices, vertices
  /// outside [0, order) or a total other than 1.
  static ProbMeasure make(std::size_t order, const std::vector<std::pair<Vertex, Rational>>& weights);
  static ProbMeasure dirac(std::size_t order, Vertex v);
  static ProbMeasure uniform(const VertexSet& support);

  std::size_t order() const noexcept { return order_; }
  const std::map<Vertex, Rational>& weights() const noexcept { return weights_; }
  Rational weight(Vertex v) const;
  VertexSet support() const;

  friend bool operator==(const ProbMeasure&, const ProbMeasure&) = default;

 private:
  std::size_t order_ = 0;
  std::map<Vertex, Rational> weights_;
};

Rational ev(const ProbMeasure& mu, const VertexSet& s);
Rational ev(const Wallspace& ws, const ProbMeasure& mu, Halfspace h);

struct BarycenterResult {
  /// C_μ: intersection of the majority halfspaces.
  VertexSet center;
  bool singleton = false;
  /// μ(h) = 1/2, by id.
  std::vector<Halfspace> balanced;
  /// μ(h) > 1/2, by id.
  std::vector<Halfspace> majority;
};

/// Throws InvalidMeasure if the measure lives on a graph of another order.
BarycenterResult center_of_mass(const Wallspace& ws, const ProbMeasure& mu);

struct SingletonCriterion {
  /// No pair x != y has every separating halfspace balanced.
  bool singleton = true;
  std::optional<std::pair<Vertex, Vertex>> witness;
};

/// Scans all vertex pairs and tests H(x, y) ⊆ balanced halfspaces.
SingletonCriterion singleton_criterion(const Wallspace& ws, const ProbMeasure& mu);

struct BalancedCheck {
  bool holds = true;
  /// Pair of points of C_μ and a halfspace separating them that is not balanced.
  std::optional<std::pair<Vertex, Vertex>> pair;
  std::optional<Halfspace> unbalanced;
};

/// Every halfspace separating two points of C_μ must be balanced.
BalancedCheck balanced_transversality_check(const Wallspace& ws, const ProbMeasure& mu);

struct PsiValue {
  Rational value;
  Halfspace argmin;
};

/// min over the family of |μ1(h) − μ1(h^c)| + |μ2(h) − μ2(h^c)|; ties go
/// to the earliest member. Throws EmptyFamily.
PsiValue psi(const Wallspace& ws, const ProbMeasure& mu1, const ProbMeasure& mu2, std::span<const Halfspace> family);
/// Over all halfspaces.
PsiValue psi(const Wallspace& ws, const ProbMeasure& mu1, const ProbMeasure& mu2);

/// (g_* μ)(v) = μ(g^{-1} v). Throws NotAutomorphism.
ProbMeasure pushforward(const Graph& g, const ProbMeasure& mu, const Automorphism& a);

/// First member of the family (all halfspaces when empty) with μ(h) > 1 − ε.
std::optional<Halfspace> concentrated_halfspace(const Wallspace& ws, const ProbMeasure& mu, const Rational& epsilon,
                                                std::span<const Halfspace> family = {});

}  // namespace medkit
