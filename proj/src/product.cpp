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

#include "kronkit/product.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "kronkit/errors.hpp"

namespace kronkit {

ProductGraph::ProductGraph(Graph graph, Graph factor1, Graph factor2)
    : graph_(std::move(graph)), factor1_(std::move(factor1)), factor2_(std::move(factor2)) {
  if (graph_.order() != factor1_.order() * factor2_.order()) {
    throw InvalidArgument("product order does not match its factors");
  }
}

Vertex ProductGraph::index(Vertex u, Vertex v) const {
  if (u >= factor1_order() || v >= factor2_order()) {
    throw InvalidArgument("product coordinates (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range");
  }
  return static_cast<Vertex>(u * factor2_order() + v);
}

ProductVertex ProductGraph::vertex(Vertex linear_index) const {
  if (linear_index >= graph_.order()) {
    throw InvalidArgument("product vertex " + std::to_string(linear_index) + " out of range");
  }
  const auto n = static_cast<Vertex>(factor2_order());
  return {linear_index / n, linear_index % n, linear_index};
}

ProductGraph kronecker(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) throw InvalidArgument("Kronecker product of an empty factor");
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  if (m * n > kMaxOrder) {
    throw SizeLimitError("product order " + std::to_string(m * n) + " exceeds supported maximum",
                         m * n);
  }
  Graph h(m * n);
  const std::vector<Edge> e2 = g2.edges();
  for (const Edge& e1 : g1.edges()) {
    for (const Edge& f : e2) {
      // Each pair of factor edges yields the two product edges
      // (u1,v1)(u2,v2) and (u1,v2)(u2,v1).
      h.add_edge(static_cast<Vertex>(e1.u * n + f.u), static_cast<Vertex>(e1.v * n + f.v));
      h.add_edge(static_cast<Vertex>(e1.u * n + f.v), static_cast<Vertex>(e1.v * n + f.u));
    }
  }
  std::string label;
  if (!g1.label().empty() && !g2.label().empty()) label = g1.label() + "x" + g2.label();
  h.set_label(std::move(label));
  return ProductGraph(std::move(h), g1, g2);
}

ProductGraph kronecker_with_complete(const Graph& g, std::size_t n) {
  return kronecker(g, make_complete(n));
}

std::size_t product_degree(const Graph& g1, const Graph& g2, Vertex u, Vertex v) {
  if (u >= g1.order() || v >= g2.order()) {
    throw InvalidArgument("factor vertex out of range");
  }
  return g1.degree(u) * g2.degree(v);
}

BipartiteResult check_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, kUnseen);
  std::vector<Vertex> parent(n, 0);
  BipartiteResult result;

  for (Vertex root = 0; root < n; ++root) {
    if (level[root] != kUnseen) continue;
    level[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (level[y] == kUnseen) {
          level[y] = level[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (level[y] == level[x]) {
          // root ... x, y ... root has length 2 * level + 1.
          std::vector<Vertex> walk;
          for (Vertex w = x; w != root; w = parent[w]) walk.push_back(w);
          walk.push_back(root);
          std::reverse(walk.begin(), walk.end());
          for (Vertex w = y; w != root; w = parent[w]) walk.push_back(w);
          walk.push_back(root);
          result.bipartite = false;
          result.odd_closed_walk = std::move(walk);
          return result;
        }
      }
    }
  }
  result.side.resize(n);
  for (Vertex v = 0; v < n; ++v) result.side[v] = static_cast<std::uint8_t>(level[v] % 2);
  return result;
}

bool weichsel_connected(const Graph& g1, const Graph& g2) {
  for (const Graph* g : {&g1, &g2}) {
    if (!is_connected(*g) || g->edge_count() == 0) {
      throw PreconditionError("weichsel_connected needs connected factors with at least one edge");
    }
  }
  return !is_bipartite(g1) || !is_bipartite(g2);
}

std::vector<Fiber> fibers(const ProductGraph& product) {
  const std::size_t n = product.factor2_order();
  std::vector<Fiber> out;
  out.reserve(product.factor1_order());
  for (Vertex u = 0; u < product.factor1_order(); ++u) {
    Fiber fiber{u, VertexSet(product.graph().order())};
    for (Vertex v = 0; v < n; ++v) fiber.members.insert(static_cast<Vertex>(u * n + v));
    out.push_back(std::move(fiber));
  }
  return out;
}

void write_linearization(std::ostream& out, const ProductGraph& product) {
  for (Vertex i = 0; i < product.graph().order(); ++i) {
    const ProductVertex pv = product.vertex(i);
    out << pv.linear_index << ' ' << pv.factor1 << ' ' << pv.factor2 << '\n';
  }
}

}  // namespace kronkit
