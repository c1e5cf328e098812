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

#include "kronkit/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "kronkit/errors.hpp"

namespace kronkit {
namespace {

// Unit-capacity flow on the vertex-split digraph: vertex v becomes
// in(v) = 2v -> out(v) = 2v+1 with capacity 1, and each edge uv becomes
// out(u) -> in(v) and out(v) -> in(u) with capacity 1 (an edge never carries
// more than one unit in a vertex-disjoint path family anyway).
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex s, Vertex t) : nodes_(2 * g.order()), head_(nodes_, -1) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const int cap = (v == s || v == t) ? static_cast<int>(g.order()) : 1;
      add_arc(2 * v, 2 * v + 1, cap);
    }
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, 1);
      add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  std::size_t max_flow(std::size_t limit) {
    std::size_t flow = 0;
    std::vector<int> via(nodes_);
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[source_] = -2;
      std::deque<std::size_t> queue{source_};
      while (!queue.empty() && via[sink_] == -1) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.cap > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[sink_] == -1) break;
      for (std::size_t x = sink_; x != source_;) {
        const int a = via[x];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int next;
  };

  void add_arc(std::size_t from, std::size_t to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  std::size_t nodes_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
};

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order
// until it returns false.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (k > n) return true;
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_nonempty(const Graph& g, const char* op) {
  if (g.empty()) throw InvalidArgument(std::string(op) + " is undefined for the empty graph");
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // result * (n - i) is divisible by i + 1; divide before multiplying.
    const std::uint64_t g = std::gcd(result, i + 1);
    const std::uint64_t factor = (n - i) / ((i + 1) / g);
    result /= g;
    if (result > kMax / factor) return kMax;
    result *= factor;
  }
  return result;
}

bool is_separating(const Graph& g, const VertexSet& removed) {
  const VertexSet alive = g.all_vertices() - removed;
  const std::size_t left = alive.size();
  if (left == 0) return false;
  if (left == 1) return true;
  return !is_connected_within(g, alive);
}

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  if (s >= g.order() || t >= g.order() || s == t) {
    throw InvalidArgument("local connectivity needs two distinct vertices");
  }
  if (g.adjacent(s, t)) throw InvalidArgument("local connectivity of adjacent vertices is unbounded");
  SplitFlow flow(g, s, t);
  return flow.max_flow(limit);
}

std::size_t vertex_connectivity(const Graph& g) {
  require_nonempty(g, "vertex connectivity");
  const std::size_t n = g.order();
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;

  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;

  // Removing N(v) isolates v from at least one other vertex, so delta bounds kappa.
  std::size_t best = g.degree(v);
  for (Vertex w = 0; w < n; ++w) {
    if (w == v || g.adjacent(v, w)) continue;
    best = std::min(best, local_vertex_connectivity(g, v, w, best));
  }
  const std::vector<Vertex> nbrs = g.neighbors(v).to_vector();
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.adjacent(nbrs[i], nbrs[j])) continue;
      best = std::min(best, local_vertex_connectivity(g, nbrs[i], nbrs[j], best));
    }
  }
  return best;
}

std::size_t brute_force_connectivity(const Graph& g) {
  require_nonempty(g, "vertex connectivity");
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw SizeLimitError("brute-force connectivity is limited to order " +
                             std::to_string(kBruteForceMaxOrder),
                         n);
  }
  for (std::size_t k = 0; k < n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<Vertex>& subset) {
      found = is_separating(g, VertexSet::of(n, subset));
      return !found;
    });
    if (found) return k;
  }
  return n - 1;  // unreachable: n-1 removals always leave K_1
}

bool scan_separating_sets(const Graph& g, std::size_t size, std::uint64_t budget,
                          const std::function<bool(const VertexSet&)>& visit) {
  const std::size_t n = g.order();
  const std::uint64_t count = binomial(n, size);
  if (count > budget) {
    throw SizeLimitError("scanning C(" + std::to_string(n) + "," + std::to_string(size) +
                             ") = " + std::to_string(count) + " subsets exceeds the budget of " +
                             std::to_string(budget),
                         count);
  }
  const VertexSet all = g.all_vertices();
  VertexSet removed(n);
  VertexSet alive(n);
  return for_each_subset(n, size, [&](const std::vector<Vertex>& subset) {
    removed.clear();
    for (Vertex v : subset) removed.insert(v);
    if (n - size == 0) return true;
    if (n - size > 1) {
      alive = all;
      alive -= removed;
      if (is_connected_within(g, alive)) return true;
    }
    return visit(removed);
  });
}

CutSet classify_cut(const Graph& g, const VertexSet& s) {
  CutSet cut;
  cut.vertices = s.to_vector();
  cut.separates = is_separating(g, s);
  const VertexSet alive = g.all_vertices() - s;
  for (Vertex v : alive) {
    if (!g.neighbors(v).intersects(alive)) {
      cut.isolates = true;
      cut.isolated_vertex = v;
      break;
    }
  }
  const std::size_t k = s.size();
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) == k && g.neighbors(x) == s) {
      cut.is_neighborhood = true;
      cut.witness = x;
      break;
    }
  }
  return cut;
}

CutSet classify_cut(const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex v : s) {
    if (v >= g.order()) throw InvalidArgument("cut vertex " + std::to_string(v) + " out of range");
  }
  return classify_cut(g, VertexSet::of(g.order(), s));
}

CutSet classify_cut(const ProductGraph& product, const VertexSet& s) {
  CutSet cut = classify_cut(product.graph(), s);
  for (const Fiber& fiber : fibers(product)) {
    if (fiber.members.is_subset_of(s)) {
      cut.contained_fiber = fiber.factor1_vertex;
      break;
    }
  }
  return cut;
}

std::vector<CutSet> enumerate_min_cuts(const Graph& g, std::size_t kappa, std::uint64_t budget) {
  require_nonempty(g, "minimum cut enumeration");
  if (!is_connected(g)) throw PreconditionError("minimum cut enumeration needs a connected graph");
  std::vector<CutSet> cuts;
  scan_separating_sets(g, kappa, budget, [&](const VertexSet& s) {
    cuts.push_back(classify_cut(g, s));
    return true;
  });
  return cuts;
}

std::vector<CutSet> enumerate_min_cuts(const Graph& g, std::uint64_t budget) {
  require_nonempty(g, "minimum cut enumeration");
  return enumerate_min_cuts(g, vertex_connectivity(g), budget);
}

bool is_super_kappa(const Graph& g, std::uint64_t budget) {
  require_nonempty(g, "super-connectivity");
  if (!is_connected(g)) return false;
  const std::size_t kappa = vertex_connectivity(g);
  const VertexSet all = g.all_vertices();
  return scan_separating_sets(g, kappa, budget, [&](const VertexSet& s) {
    const VertexSet alive = all - s;
    for (Vertex v : alive)
      if (!g.neighbors(v).intersects(alive)) return true;
    return false;
  });
}

bool kappa_of_deletion_check(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("vertex deletion check needs at least two vertices");
  const std::size_t kappa = vertex_connectivity(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (vertex_connectivity(delete_vertex(g, v)) + 1 < kappa) return false;
  }
  return true;
}

ConnectivityResult analyze_connectivity(const Graph& g, std::uint64_t budget) {
  require_nonempty(g, "connectivity analysis");
  ConnectivityResult result;
  result.kappa = vertex_connectivity(g);
  result.delta = g.min_degree();
  result.maximally_connected = result.kappa == result.delta;
  if (!is_connected(g)) return result;
  result.min_cuts = enumerate_min_cuts(g, result.kappa, budget);
  result.super_kappa = std::all_of(result.min_cuts.begin(), result.min_cuts.end(),
                                   [](const CutSet& c) { return c.isolates; });
  return result;
}

}  // namespace kronkit
