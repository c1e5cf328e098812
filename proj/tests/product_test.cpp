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

#include "kronkit/graph6.hpp"
#include "kronkit/product.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "kronkit/corpus.hpp"
#include "kronkit/errors.hpp"
#include "oracle.hpp"

namespace kronkit {
namespace {

TEST(KroneckerTest, SmallProducts) {
  const ProductGraph k2k2 = kronecker(make_complete(2), make_complete(2));
  EXPECT_EQ(k2k2.graph().order(), 4u);
  EXPECT_EQ(k2k2.graph().edge_count(), 2u);
  EXPECT_FALSE(is_connected(k2k2.graph()));
  // (0,0)-(1,1) and (0,1)-(1,0).
  EXPECT_TRUE(k2k2.graph().adjacent(0, 3));
  EXPECT_TRUE(k2k2.graph().adjacent(1, 2));

  const ProductGraph c3k3 = kronecker(make_cycle(3), make_complete(3));
  EXPECT_EQ(c3k3.graph().order(), 9u);
  EXPECT_EQ(c3k3.graph().edge_count(), 18u);

  const Graph c3k2 = kronecker(make_cycle(3), make_complete(2)).graph();
  EXPECT_EQ(c3k2.order(), 6u);
  EXPECT_EQ(c3k2.edge_count(), 6u);
  EXPECT_EQ(c3k2.degree_summary().degree_sequence, std::vector<std::size_t>(6, 2));
  EXPECT_TRUE(is_connected(c3k2));

  EXPECT_THROW(kronecker(Graph(0), make_complete(3)), InvalidArgument);
}

TEST(KroneckerTest, Linearization) {
  const ProductGraph p = kronecker_with_complete(make_cycle(5), 3);
  for (Vertex i = 0; i < p.graph().order(); ++i) {
    const ProductVertex pv = p.vertex(i);
    EXPECT_EQ(pv.linear_index, i);
    EXPECT_EQ(p.index(pv.factor1, pv.factor2), i);
    EXPECT_EQ(pv.factor1 * 3 + pv.factor2, i);
  }
  EXPECT_THROW(p.vertex(15), InvalidArgument);
  EXPECT_THROW(p.index(5, 0), InvalidArgument);

  std::ostringstream out;
  write_linearization(out, kronecker_with_complete(make_complete(2), 2));
  EXPECT_EQ(out.str(), "0 0 0\n1 0 1\n2 1 0\n3 1 1\n");
}

TEST(KroneckerTest, ProductDegree) {
  const Graph c5 = make_cycle(5);
  const Graph k3 = make_complete(3);
  const Graph h = kronecker(c5, k3).graph();
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 3; ++v) {
      EXPECT_EQ(product_degree(c5, k3, u, v), 4u);
      EXPECT_EQ(h.degree(u * 3 + v), 4u);
    }
  }
  const Graph with_isolated = Graph::from_edges(3, {{0, 1}});
  EXPECT_EQ(product_degree(with_isolated, k3, 2, 1), 0u);
  EXPECT_EQ(product_degree(make_complete(4), k3, 1, 2), 6u);
  EXPECT_THROW(product_degree(c5, k3, 5, 0), InvalidArgument);
}

// Vertex count, edge count 2|E1||E2| and the degree-product law, checked
// against the edge-rule oracle on every pair of graphs with at most four
// vertices.
TEST(KroneckerTest, ObservationIdentitiesExhaustive) {
  const std::vector<Graph> graphs = all_graphs_up_to(4);
  for (const Graph& a : graphs) {
    for (const Graph& b : graphs) {
      const ProductGraph p = kronecker(a, b);
      const Graph& h = p.graph();
      h.validate();
      ASSERT_EQ(h.order(), a.order() * b.order());
      EXPECT_EQ(h.edge_count(), 2 * a.edge_count() * b.edge_count());
      EXPECT_EQ(oracle::to_matrix(h), oracle::kronecker(oracle::to_matrix(a), oracle::to_matrix(b)));
      for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v) EXPECT_EQ(h.degree(p.index(u, v)), a.degree(u) * b.degree(v));

      const Graph swapped = kronecker(b, a).graph();
      EXPECT_EQ(swapped.order(), h.order());
      EXPECT_EQ(swapped.edge_count(), h.edge_count());
      EXPECT_EQ(swapped.degree_summary().degree_sequence, h.degree_summary().degree_sequence);
    }
  }
}

TEST(BipartiteTest, CyclesAndWitness) {
  EXPECT_TRUE(is_bipartite(make_cycle(6)));
  EXPECT_TRUE(is_bipartite(make_complete(2)));
  EXPECT_TRUE(is_bipartite(Graph(3)));

  for (const Graph& g : {make_cycle(5), make_petersen(), make_complete(4)}) {
    const BipartiteResult r = check_bipartite(g);
    ASSERT_FALSE(r.bipartite);
    const auto& walk = r.odd_closed_walk;
    ASSERT_GE(walk.size(), 4u);
    EXPECT_EQ(walk.front(), walk.back());
    EXPECT_EQ((walk.size() - 1) % 2, 1u);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) EXPECT_TRUE(g.adjacent(walk[i], walk[i + 1]));
  }

  const BipartiteResult even = check_bipartite(make_cycle(8));
  for (const Edge& e : make_cycle(8).edges()) EXPECT_NE(even.side[e.u], even.side[e.v]);
}

TEST(WeichselTest, Examples) {
  EXPECT_FALSE(weichsel_connected(make_complete(2), make_complete(2)));
  EXPECT_TRUE(weichsel_connected(make_cycle(5), make_complete(2)));
  EXPECT_FALSE(weichsel_connected(make_cycle(4), make_cycle(6)));
  EXPECT_THROW(weichsel_connected(Graph::from_edges(4, {{0, 1}, {2, 3}}), make_complete(3)),
               PreconditionError);
  EXPECT_THROW(weichsel_connected(make_complete(1), make_complete(3)), PreconditionError);
}

TEST(WeichselTest, AgreesWithTraversal) {
  const std::vector<Graph> graphs = connected_graphs_up_to(5, 2);
  for (const Graph& a : graphs) {
    for (const Graph& b : graphs) {
      EXPECT_EQ(weichsel_connected(a, b), is_connected(kronecker(a, b).graph()))
          << encode_graph6(a) << " x " << encode_graph6(b);
    }
  }
}

TEST(FiberTest, PartitionIntoIndependentSets) {
  const ProductGraph p = kronecker_with_complete(make_cycle(5), 3);
  const std::vector<Fiber> fs = fibers(p);
  ASSERT_EQ(fs.size(), 5u);
  VertexSet seen(p.graph().order());
  for (const Fiber& f : fs) {
    EXPECT_EQ(f.members.size(), 3u);
    EXPECT_FALSE(f.members.intersects(seen));
    seen |= f.members;
    for (Vertex x : f.members) EXPECT_FALSE(p.graph().neighbors(x).intersects(f.members));
  }
  EXPECT_EQ(seen.size(), 15u);

  const ProductGraph q = kronecker_with_complete(make_complete(2), 3);
  const std::vector<Fiber> qs = fibers(q);
  ASSERT_EQ(qs.size(), 2u);
  for (const Fiber& f : qs) {
    EXPECT_EQ(f.members.size(), 3u);
    for (Vertex x : f.members)
      for (Vertex y : f.members) EXPECT_FALSE(q.graph().adjacent(x, y));
  }
}

}  // namespace
}  // namespace kronkit
