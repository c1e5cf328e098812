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

#ifndef KRONKIT_CONNECTIVITY_HPP_
#define KRONKIT_CONNECTIVITY_HPP_

// Vertex connectivity and minimum separating sets.
//
// S is separating when G - S is disconnected or is the single vertex K_1.
// Under that convention kappa(K_n) = n - 1, every (n-1)-subset of K_n is a
// minimum cut, and the lone survivor counts as an isolated vertex, so
// complete graphs are super-kappa. S = V(G) is never separating.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kronkit/graph.hpp"
#include "kronkit/product.hpp"

namespace kronkit {

inline constexpr std::uint64_t kDefaultSubsetBudget = 50'000'000;
inline constexpr std::size_t kBruteForceMaxOrder = 20;

struct CutSet {
  std::vector<Vertex> vertices;  // ascending
  bool separates = false;
  // Some vertex of G - S has no neighbor in G - S.
  bool isolates = false;
  std::optional<Vertex> isolated_vertex;  // smallest such vertex
  // S = N(x) exactly for some x.
  bool is_neighborhood = false;
  std::optional<Vertex> witness;  // smallest such x
  // Set by the product overload of classify_cut: smallest u_i whose whole
  // fiber {u_i} x V(K_n) lies inside S.
  std::optional<Vertex> contained_fiber;
};

struct ConnectivityResult {
  std::size_t kappa = 0;
  std::size_t delta = 0;
  bool maximally_connected = false;
  std::vector<CutSet> min_cuts;
  bool super_kappa = false;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// True iff G - removed is disconnected or K_1.
bool is_separating(const Graph& g, const VertexSet& removed);

// kappa(G) from vertex-disjoint path counts (unit-capacity max-flow on the
// vertex-split digraph). Pairs examined: a minimum-degree vertex v against
// each non-neighbor, then each non-adjacent pair of neighbors of v.
// Throws InvalidArgument on the empty graph.
std::size_t vertex_connectivity(const Graph& g);

// Maximum number of internally disjoint s-t paths, for distinct
// non-adjacent s and t. Stops counting at `limit`.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                      std::size_t limit = static_cast<std::size_t>(-1));

// Smallest k with a separating k-subset, by scanning all subsets in order
// of size. Throws SizeLimitError above kBruteForceMaxOrder vertices.
std::size_t brute_force_connectivity(const Graph& g);

// Visits every separating set of exactly `size` vertices in lexicographic
// order of their sorted id lists; `visit` returns false to stop early.
// Returns false iff stopped early. Throws SizeLimitError when
// C(order, size) exceeds `budget`.
bool scan_separating_sets(const Graph& g, std::size_t size, std::uint64_t budget,
                          const std::function<bool(const VertexSet&)>& visit);

// Every separating set of size kappa(G), classified, lexicographic order.
// Requires a connected graph with at least two vertices.
std::vector<CutSet> enumerate_min_cuts(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget);
std::vector<CutSet> enumerate_min_cuts(const Graph& g, std::size_t kappa, std::uint64_t budget);

// True iff every minimum separating set isolates a vertex. False for
// disconnected graphs. Requires order >= 2.
bool is_super_kappa(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget);

CutSet classify_cut(const Graph& g, const VertexSet& s);
CutSet classify_cut(const Graph& g, const std::vector<Vertex>& s);
// Also reports whether S swallows a whole fiber of a G x K_n product.
CutSet classify_cut(const ProductGraph& product, const VertexSet& s);

// kappa(G - v) >= kappa(G) - 1 for every v. Requires order >= 2.
bool kappa_of_deletion_check(const Graph& g);

// kappa, delta and, for connected graphs of order >= 2, the full list of
// minimum cuts with the super-kappa verdict.
ConnectivityResult analyze_connectivity(const Graph& g, std::uint64_t budget = kDefaultSubsetBudget);

}  // namespace kronkit

#endif  // KRONKIT_CONNECTIVITY_HPP_
