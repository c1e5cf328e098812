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

#ifndef KRONKIT_PRODUCT_HPP_
#define KRONKIT_PRODUCT_HPP_

// Kronecker (direct, tensor) product G1 x G2: (u1,v1) ~ (u2,v2) iff u1 ~ u2
// in G1 and v1 ~ v2 in G2.
//
// Product vertex (u, v) has linear id u * |V(G2)| + v. Everything that
// reports product vertices (cuts, residues, mapping files) uses this id.

#include <cstddef>
#include <ostream>
#include <vector>

#include "kronkit/graph.hpp"

namespace kronkit {

struct ProductVertex {
  Vertex factor1 = 0;
  Vertex factor2 = 0;
  Vertex linear_index = 0;

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

class ProductGraph {
 public:
  ProductGraph(Graph graph, Graph factor1, Graph factor2);

  const Graph& graph() const noexcept { return graph_; }
  const Graph& factor1() const noexcept { return factor1_; }
  const Graph& factor2() const noexcept { return factor2_; }
  std::size_t factor1_order() const noexcept { return factor1_.order(); }
  std::size_t factor2_order() const noexcept { return factor2_.order(); }

  Vertex index(Vertex u, Vertex v) const;
  ProductVertex vertex(Vertex linear_index) const;

 private:
  Graph graph_;
  Graph factor1_;
  Graph factor2_;
};

// The fiber S_i = {u_i} x V(G2). Always an independent set.
struct Fiber {
  Vertex factor1_vertex = 0;
  VertexSet members;
};

// Throws InvalidArgument if either factor is empty, SizeLimitError if the
// product order exceeds kMaxOrder.
ProductGraph kronecker(const Graph& g1, const Graph& g2);

// G x K_n.
ProductGraph kronecker_with_complete(const Graph& g, std::size_t n);

// d_{G1}(u) * d_{G2}(v), from the factors alone.
std::size_t product_degree(const Graph& g1, const Graph& g2, Vertex u, Vertex v);

struct BipartiteResult {
  bool bipartite = true;
  // side[v] in {0,1} when bipartite.
  std::vector<std::uint8_t> side;
  // When not bipartite: closed walk w0, w1, ..., wk = w0 of odd length k.
  std::vector<Vertex> odd_closed_walk;
};

BipartiteResult check_bipartite(const Graph& g);
inline bool is_bipartite(const Graph& g) { return check_bipartite(g).bipartite; }

// Connectedness of g1 x g2 from the factors: true iff one factor has an odd
// cycle. Both factors must be connected with at least one edge, otherwise
// PreconditionError.
bool weichsel_connected(const Graph& g1, const Graph& g2);

// One fiber per vertex of the first factor, in factor order.
std::vector<Fiber> fibers(const ProductGraph& product);

// "linear_index factor1 factor2" rows, one per product vertex.
void write_linearization(std::ostream& out, const ProductGraph& product);

}  // namespace kronkit

#endif  // KRONKIT_PRODUCT_HPP_
