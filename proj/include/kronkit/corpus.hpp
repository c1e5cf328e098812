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

#ifndef KRONKIT_CORPUS_HPP_
#define KRONKIT_CORPUS_HPP_
// Exhaustive generation of small graphs up to isomorphism.
// checkers can sweep complete corpora without an external geng install.

#include <cstddef>
#include <string>
#include <vector>

#include "kronkit/graph.hpp"

namespace kronkit {

// Largest order all_graphs() accepts. Order 10 already has ~12 million
// isomorphism classes.
inline constexpr std::size_t kMaxCorpusOrder = 9;

// Canonical relabeling: isomorphic graphs map to identical Graphs. Computed by
// individualization/refinement, keeping the lexicographically smallest
// graph6 string over all leaves of the search tree.
Graph canonical_form(const Graph& g);

// graph6 of canonical_form(g); a complete isomorphism invariant.
std::string canonical_graph6(const Graph& g);

// One canonical representative per isomorphism class of graphs on `order`
// vertices, sorted by graph6 string. Throws SizeLimitError above
// kMaxCorpusOrder.
std::vector<Graph> all_graphs(std::size_t order);

// all_graphs(1), all_graphs(2), ..., all_graphs(max_order) concatenated.
std::vector<Graph> all_graphs_up_to(std::size_t max_order);

// Convenience filter over all_graphs_up_to.
std::vector<Graph> connected_graphs_up_to(std::size_t max_order, std::size_t min_order = 1);

}  // namespace kronkit

#endif  // KRONKIT_CORPUS_HPP_
