#include "medkit/vertex_set.hpp"

#include "medkit/error.hpp"

#include <string>

namespace medkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotMedian: return "NotMedian";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::ThetaNotTransitive: return "ThetaNotTransitive";
    case ErrorKind::InconsistentPocset: return "InconsistentPocset";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::NotConstant: return "NotConstant";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  Bits bits(universe);
  bits.set();
  return VertexSet(std::move(bits));
}

VertexSet VertexSet::singleton(std::size_t universe, Vertex v) {
  VertexSet s(universe);
  s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) {
    throw Error(ErrorKind::InvalidGraph,
                "vertex " + std::to_string(v) + " outside range of size " + std::to_string(bits_.size()));
  }
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

VertexSet VertexSet::complement() const {
  Bits flipped = bits_;
  flipped.flip();
  return VertexSet(std::move(flipped));
}

std::optional<Vertex> VertexSet::first() const {
  auto pos = bits_.find_first();
  if (pos == Bits::npos) return std::nullopt;
  return static_cast<Vertex>(pos);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.universe() != universe()) {
    throw Error(ErrorKind::InvalidGraph, "vertex sets over different graphs");
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  bits_ -= other.bits_;
  return *this;
}

}  // namespace medkit
