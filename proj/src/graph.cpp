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

#include "kronkit/graph.hpp"

#include <algorithm>
#include <random>

#include "kronkit/errors.hpp"

namespace kronkit {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

std::size_t VertexSet::next(std::size_t from) const noexcept {
  if (from >= universe_) return universe_;
  std::size_t w = from / kWordBits;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
  while (true) {
    if (word != 0) {
      return std::min(universe_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
    }
    if (++w == words_.size()) return universe_;
    word = words_[w];
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

Graph::Graph(std::size_t order, std::string label) : label_(std::move(label)) {
  if (order > kMaxOrder) {
    throw SizeLimitError("graph order " + std::to_string(order) + " exceeds the supported maximum " +
                             std::to_string(kMaxOrder),
                         order);
  }
  adjacency_.assign(order, VertexSet(order));
}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges, std::string label) {
  Graph g(order, std::move(label));
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} out of range for order " + std::to_string(order()));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) return;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
}

std::size_t Graph::min_degree() const noexcept {
  if (adjacency_.empty()) return 0;
  std::size_t best = order();
  for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
  return best;
}

DegreeSummary Graph::degree_summary() const {
  DegreeSummary summary;
  summary.degree_sequence.reserve(order());
  for (const auto& nbrs : adjacency_) summary.degree_sequence.push_back(nbrs.size());
  std::sort(summary.degree_sequence.begin(), summary.degree_sequence.end());
  summary.min_degree = summary.degree_sequence.empty() ? 0 : summary.degree_sequence.front();
  summary.edge_count = edge_count_;
  return summary;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (std::size_t v = adjacency_[u].next(u + 1); v < order(); v = adjacency_[u].next(v + 1)) {
      out.push_back({u, static_cast<Vertex>(v)});
    }
  }
  return out;
}

void Graph::validate() const {
  std::size_t degree_total = 0;
  for (Vertex u = 0; u < order(); ++u) {
    const VertexSet& nbrs = adjacency_[u];
    if (nbrs.universe() != order()) {
      throw PreconditionError("adjacency of vertex " + std::to_string(u) + " has wrong universe");
    }
    if (nbrs.contains(u)) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    for (Vertex v : nbrs) {
      if (!adjacency_[v].contains(u)) {
        throw PreconditionError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                std::to_string(v));
      }
    }
    // Bits past the universe would be invisible to iteration but break equality.
    if (!nbrs.is_subset_of(VertexSet::full(order()))) {
      throw PreconditionError("neighbor id out of range at vertex " + std::to_string(u));
    }
    degree_total += nbrs.size();
  }
  if (degree_total != 2 * edge_count_) throw PreconditionError("edge count out of sync");
}

Graph make_complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete graph needs n >= 1");
  Graph g(n, "K" + std::to_string(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3, got " + std::to_string(n));
  Graph g(n, "C" + std::to_string(n));
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

Graph make_path(std::size_t n) {
  Graph g(n, "P" + std::to_string(n));
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_petersen() {
  Graph g(10, "Petersen");
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph random_graph(std::size_t order, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(order);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  }
  VertexSet keep = g.all_vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> new_id(g.order(), 0);
  Vertex next = 0;
  for (Vertex v : keep) new_id[v] = next++;
  Graph h(next);
  for (Vertex u : keep) {
    for (Vertex w : g.neighbors(u) & keep) {
      if (u < w) h.add_edge(new_id[u], new_id[w]);
    }
  }
  return h;
}

VertexSet reachable(const Graph& g, const VertexSet& alive, Vertex start) {
  VertexSet seen(g.order());
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet grown(g.order());
    for (Vertex v : frontier) grown |= g.neighbors(v);
    grown &= alive;
    grown -= seen;
    seen |= grown;
    frontier = std::move(grown);
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  VertexSet left = alive;
  while (!left.empty()) {
    VertexSet comp = reachable(g, left, static_cast<Vertex>(left.first()));
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected_within(const Graph& g, const VertexSet& alive) {
  if (alive.empty()) return true;
  return reachable(g, alive, static_cast<Vertex>(alive.first())).size() == alive.size();
}

bool is_connected(const Graph& g) { return !g.empty() && is_connected_within(g, g.all_vertices()); }

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace kronkit
