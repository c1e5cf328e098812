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

#include "kronkit/corpus.hpp"

#include <algorithm>
#include <unordered_set>

#include "kronkit/errors.hpp"
#include "kronkit/graph6.hpp"

namespace kronkit {
namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits every cell by the vector of neighbor counts into each current cell,
// until the partition is equitable. Depends only on the ordered partition
// and the adjacency, never on vertex ids, so it commutes with relabeling.
void refine(const Graph& g, Partition& cells) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> cell_of(n);
  std::vector<std::uint32_t> signature;
  while (true) {
    const std::size_t k = cells.size();
    if (k == n) return;
    for (std::size_t c = 0; c < k; ++c)
      for (Vertex v : cells[c]) cell_of[v] = static_cast<std::uint32_t>(c);
    signature.assign(n * k, 0);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.neighbors(v)) ++signature[v * k + cell_of[w]];

    auto sig_less = [&](Vertex a, Vertex b) {
      return std::lexicographical_compare(signature.begin() + a * k, signature.begin() + (a + 1) * k,
                                          signature.begin() + b * k, signature.begin() + (b + 1) * k);
    };
    auto sig_equal = [&](Vertex a, Vertex b) {
      return std::equal(signature.begin() + a * k, signature.begin() + (a + 1) * k,
                        signature.begin() + b * k);
    };

    Partition next;
    next.reserve(n);
    for (Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) {
        if (sig_less(a, b)) return true;
        if (sig_less(b, a)) return false;
        return a < b;
      });
      Cell group{cell.front()};
      for (std::size_t i = 1; i < cell.size(); ++i) {
        if (!sig_equal(cell[i], group.front())) {
          next.push_back(std::move(group));
          group.clear();
        }
        group.push_back(cell[i]);
      }
      next.push_back(std::move(group));
    }
    const bool split = next.size() != k;
    cells = std::move(next);
    if (!split) return;
  }
}

std::string leaf_certificate(const Graph& g, const Partition& cells) {
  Graph relabeled(g.order());
  std::vector<Vertex> position(g.order());
  for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i].front()] = static_cast<Vertex>(i);
  for (const Edge& e : g.edges()) relabeled.add_edge(position[e.u], position[e.v]);
  return encode_graph6(relabeled);
}

void search(const Graph& g, Partition cells, std::string& best, Partition& best_leaf) {
  refine(g, cells);
  std::size_t target = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() > 1) {
      target = i;
      break;
    }
  }
  if (target == cells.size()) {
    std::string cert = leaf_certificate(g, cells);
    if (best.empty() || cert < best) {
      best = std::move(cert);
      best_leaf = cells;
    }
    return;
  }
  for (Vertex v : cells[target]) {
    Partition child;
    child.reserve(cells.size() + 1);
    child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
    child.push_back({v});
    Cell rest;
    for (Vertex w : cells[target])
      if (w != v) rest.push_back(w);
    child.push_back(std::move(rest));
    child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
    search(g, std::move(child), best, best_leaf);
  }
}

std::vector<Graph> extend(const std::vector<Graph>& parents, std::size_t order) {
  std::unordered_set<std::string> seen;
  const std::size_t base = order - 1;
  for (const Graph& parent : parents) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base); ++mask) {
      // Every graph is its min-degree vertex added to the rest, so only
      // masks that leave the new vertex with minimum degree are needed.
      const auto new_degree = static_cast<std::size_t>(std::popcount(mask));
      bool minimal = true;
      for (Vertex u = 0; u < base && minimal; ++u) {
        minimal = parent.degree(u) + ((mask >> u) & 1U) >= new_degree;
      }
      if (!minimal) continue;
      Graph g(order);
      for (const Edge& e : parent.edges()) g.add_edge(e.u, e.v);
      for (Vertex u = 0; u < base; ++u)
        if ((mask >> u) & 1U) g.add_edge(u, static_cast<Vertex>(base));
      seen.insert(canonical_graph6(g));
    }
  }
  std::vector<std::string> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(parse_graph6(code));
  return out;
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
  if (g.order() == 0) return encode_graph6(g);
  std::string best;
  Partition leaf;
  Cell all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  search(g, Partition{std::move(all)}, best, leaf);
  return best;
}

Graph canonical_form(const Graph& g) {
  Graph out = parse_graph6(canonical_graph6(g));
  out.set_label(g.label());
  return out;
}

std::vector<Graph> all_graphs(std::size_t order) {
  if (order > kMaxCorpusOrder) {
    throw SizeLimitError("exhaustive corpus limited to order " + std::to_string(kMaxCorpusOrder),
                         order);
  }
  std::vector<Graph> level{Graph(0)};
  for (std::size_t k = 1; k <= order; ++k) level = extend(level, k);
  return level;
}

std::vector<Graph> all_graphs_up_to(std::size_t max_order) {
  if (max_order > kMaxCorpusOrder) {
    throw SizeLimitError("exhaustive corpus limited to order " + std::to_string(kMaxCorpusOrder),
                         max_order);
  }
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(0)};
  for (std::size_t k = 1; k <= max_order; ++k) {
    level = extend(level, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_order, std::size_t min_order) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs_up_to(max_order)) {
    if (g.order() >= min_order && is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace kronkit
