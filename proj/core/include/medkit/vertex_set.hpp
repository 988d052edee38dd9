#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace medkit {

using Vertex = std::uint32_t;

/// Subset of the vertex range [0, universe) of a fixed graph, stored as a
/// bit mask. Binary operations require equal universes.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const Bits* bits, Bits::size_type pos) : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    Bits::size_type pos_ = Bits::npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet singleton(std::size_t universe, Vertex v);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v);
  void erase(Vertex v);

  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  VertexSet complement() const;
  std::optional<Vertex> first() const;
  std::vector<Vertex> to_vector() const;

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits_ < b.bits_; }

  const Bits& bits() const noexcept { return bits_; }

 private:
  explicit VertexSet(Bits bits) : bits_(std::move(bits)) {}
  void require_same_universe(const VertexSet& other) const;

  Bits bits_;
};

}  // namespace medkit
