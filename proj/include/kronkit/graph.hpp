// Copyright 2026 The kronkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KRONKIT_GRAPH_HPP_
#define KRONKIT_GRAPH_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace kronkit {

using Vertex = std::uint32_t;

// Largest order a Graph may have. Vertex ids are dense in [0, order).
inline constexpr std::size_t kMaxOrder = (std::size_t{1} << 16) - 1;

// Fixed-universe bitset over vertex ids.
//
// Storage is inline for universes of up to 128 vertices (two 64-bit words)
// and spills to the heap above that; the interface is the same either way.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kInlineWords = 2;
  using Words = boost::container::small_vector<std::uint64_t, kInlineWords>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  template <typename Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v) noexcept { words_[v / kWordBits] |= bit(v); }
  void erase(Vertex v) noexcept { words_[v / kWordBits] &= ~bit(v); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member >= from, or universe() if there is none.
  std::size_t next(std::size_t from) const noexcept;
  std::size_t first() const noexcept { return next(0); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, universe_}; }

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  // Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  std::vector<Vertex> to_vector() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  const Words& words() const noexcept { return words_; }

 private:
  static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v % kWordBits); }

  std::size_t universe_ = 0;
  Words words_;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DegreeSummary {
  std::size_t min_degree = 0;
  std::vector<std::size_t> degree_sequence;  // ascending
  std::size_t edge_count = 0;
};

// Simple undirected graph on vertices 0..order-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order, std::string label = {});

  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges,
                          std::string label = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  bool empty() const noexcept { return adjacency_.empty(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Adds the edge uv; a no-op if it is already present. Throws
  // InvalidArgument for loops and out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const noexcept { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }

  // 0 for the empty graph.
  std::size_t min_degree() const noexcept;
  DegreeSummary degree_summary() const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  // Throws PreconditionError if symmetry, loop-freeness or the id range is
  // violated. Graphs built through the public API always pass.
  void validate() const;

  // Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
  std::string label_;
};

// K_n. Throws InvalidArgument for n = 0.
Graph make_complete(std::size_t n);

// C_n with edges {i, i+1 mod n}. Throws InvalidArgument for n < 3.
Graph make_cycle(std::size_t n);

// P_n, the path 0-1-...-(n-1).
Graph make_path(std::size_t n);

// The Petersen graph: outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram.
Graph make_petersen();

// G(order, p): every unordered pair {i<j} is visited in lexicographic order
// and becomes an edge iff the next 53-bit uniform draw of a mt19937_64 seeded
// with `seed` is below p. Throws InvalidArgument if p is outside [0, 1].
Graph random_graph(std::size_t order, double edge_probability, std::uint64_t seed);

// G - v. Vertices above v shift down by one: w -> w - (w > v).
Graph delete_vertex(const Graph& g, Vertex v);

// Subgraph induced by `keep`, relabeled densely in increasing id order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Components of the subgraph induced by `alive`, each as a vertex set,
// ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& alive);

// Vertices of `alive` reachable from `start` inside G[alive].
VertexSet reachable(const Graph& g, const VertexSet& alive, Vertex start);

// True iff G[alive] has at most one component (vacuously true when empty).
bool is_connected_within(const Graph& g, const VertexSet& alive);

// True for K_1 and every connected graph; false for the empty graph.
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);

}  // namespace kronkit

#endif  // KRONKIT_GRAPH_HPP_
