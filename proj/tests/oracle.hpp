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

#ifndef KRONKIT_TESTS_ORACLE_HPP_
#define KRONKIT_TESTS_ORACLE_HPP_

// Definition-level reference implementations used only by tests. They work
// on plain adjacency matrices and bitmasks and share no code with the
// library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kronkit/graph.hpp"

namespace kronkit::oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Number of components of the graph induced by `alive` (bitmask).
inline int components(const Matrix& a, std::uint64_t alive) {
  const int n = static_cast<int>(a.size());
  std::uint64_t seen = 0;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!((alive >> s) & 1U) || ((seen >> s) & 1U)) continue;
    ++count;
    std::vector<int> stack{s};
    seen |= std::uint64_t{1} << s;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (a[x][y] && ((alive >> y) & 1U) && !((seen >> y) & 1U)) {
          seen |= std::uint64_t{1} << y;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// G - S disconnected, or exactly one vertex left.
inline bool separates(const Matrix& a, std::uint64_t removed) {
  const int n = static_cast<int>(a.size());
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t alive = all & ~removed;
  const int left = std::popcount(alive);
  if (left == 0) return false;
  if (left == 1) return true;
  return components(a, alive) > 1;
}

inline int kappa(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = n - 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k < best && separates(a, s)) best = k;
  }
  return best;
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

// All separating sets of size k as sorted vertex lists, lexicographic.
inline std::vector<std::vector<int>> separating_sets(const Matrix& a, int k) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) == k && separates(a, s)) out.push_back(members(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Some vertex outside S has all its neighbors in S.
inline bool isolates(const Matrix& a, std::uint64_t removed) {
  const int n = static_cast<int>(a.size());
  for (int v = 0; v < n; ++v) {
    if ((removed >> v) & 1U) continue;
    bool lonely = true;
    for (int w = 0; w < n && lonely; ++w) lonely = !(a[v][w] && !((removed >> w) & 1U));
    if (lonely) return true;
  }
  return false;
}

// Kronecker product by the edge rule, vertex (u, v) -> u * n2 + v.
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  Matrix h(n1 * n2, std::vector<bool>(n1 * n2, false));
  for (std::size_t u1 = 0; u1 < n1; ++u1)
    for (std::size_t v1 = 0; v1 < n2; ++v1)
      for (std::size_t u2 = 0; u2 < n1; ++u2)
        for (std::size_t v2 = 0; v2 < n2; ++v2)
          h[u1 * n2 + v1][u2 * n2 + v2] = a[u1][u2] && b[v1][v2];
  return h;
}

}  // namespace kronkit::oracle

#endif  // KRONKIT_TESTS_ORACLE_HPP_
