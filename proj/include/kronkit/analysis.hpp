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

#ifndef KRONKIT_ANALYSIS_HPP_
#define KRONKIT_ANALYSIS_HPP_

// Structure of G x K_n after deleting a vertex set S.
//
// Fibers S_i = {u_i} x V(K_n) partition the product. For a removed set S the
// residues are S_i' = S_i - S, and S is "valid" when
//   (1) |S| = (n-1) delta(G),
//   (2) every residue is nonempty,
//   (3) G x K_n - S has no isolated vertex.
// For valid S the auxiliary graph G* has one vertex per residue and an edge
// i~j whenever a product edge survives between S_i' and S_j'.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kronkit/connectivity.hpp"
#include "kronkit/graph.hpp"
#include "kronkit/product.hpp"

namespace kronkit {

inline constexpr std::uint64_t kDefaultRejectionCap = 100'000;

struct ResidueConditions {
  bool size_ok = false;
  bool residues_nonempty = false;
  bool no_isolated = false;

  bool all() const { return size_ok && residues_nonempty && no_isolated; }
};

struct ResidueSystem {
  ProductGraph product;
  VertexSet removed;
  std::vector<VertexSet> residues;  // residues[i] = S_i'
  ResidueConditions conditions;
};

// Requires a connected g and n >= 3; ids in `removed` must be product ids.
ResidueSystem build_residue_system(const Graph& g, std::size_t n, const VertexSet& removed);
ResidueSystem build_residue_system(const Graph& g, std::size_t n, const std::vector<Vertex>& removed);

struct GStarGraph {
  Graph graph;
  // G* edge {i, j} (i < j) -> one surviving product edge {a, b} with a in S_i'
  // and b in S_j', the lexicographically smallest.
  std::map<Edge, Edge> edge_witnesses;
  // Z*: residues with exactly one vertex, ascending.
  std::vector<Vertex> singleton_classes;
};

// Throws PreconditionError naming the first empty residue.
GStarGraph build_gstar(const ResidueSystem& rs);

// (G - u_i) x K_n - (S - S_i) equals G x K_n - S once product vertex (u, v),
// u != u_i, is renamed to (u - [u > u_i], v). Checks this vertex by vertex
// and edge by edge for a fiber S_i contained in S.
bool fiber_deletion_identity_holds(const Graph& g, std::size_t n, const VertexSet& removed,
                                   Vertex fiber);

struct LemmaTrial {
  std::vector<Vertex> removed;  // the sampled S
  bool gstar_connected = false;
  std::size_t singleton_classes = 0;
  // Set only when the residue check applies (non-bipartite G).
  std::optional<bool> residues_unsplit;
  std::optional<Vertex> split_fiber;
};

struct LemmaCheck {
  std::string graph6;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool residue_check_applies = false;
  std::vector<LemmaTrial> trials;
  std::uint64_t rejected_residue_empty = 0;  // failed condition (2)
  std::uint64_t rejected_isolated = 0;       // failed condition (3) only
  bool exhausted = false;
  std::string message;

  std::size_t gstar_violations() const;
  std::size_t residue_violations() const;
};

// Draws `trials` valid S by rejection sampling over uniform
// (n-1)delta-subsets (at most `rejection_cap` draws per trial) and checks that
// G* is connected. When G is non-bipartite also checks that each residue lies
// inside a single component of G x K_n - S. Requires connected G with
// kappa = delta > 0 and n >= 3.
LemmaCheck check_lemmas(const Graph& g, std::size_t n, std::size_t trials, std::uint64_t seed,
                        std::uint64_t rejection_cap = kDefaultRejectionCap);

// G* connectivity only.
LemmaCheck check_lemma_gstar_connected(const Graph& g, std::size_t n, std::size_t trials,
                                       std::uint64_t seed);

// Residue containment; additionally requires non-bipartite G.
LemmaCheck check_lemma_residue_component(const Graph& g, std::size_t n, std::size_t trials,
                                         std::uint64_t seed);

// Sub-seed for instance `index` of a batch run with master seed `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class ReportStatus { kOk, kSkipped, kError };
enum class Severity { kNone, kContradictsPaper };

struct VerificationReport {
  std::string graph6;
  std::size_t n = 0;
  std::string source;  // e.g. "corpus.g6:12"; empty for inline graphs
  std::optional<std::size_t> kappa_G;
  std::optional<std::size_t> delta_G;
  std::optional<std::size_t> product_kappa;
  std::optional<std::size_t> formula_rhs;
  std::optional<bool> theorem11_holds;
  // Unset when the super-kappa claim was not checked (kappa(G) != delta(G)).
  std::optional<bool> super_kappa_verdict;
  std::optional<std::uint64_t> min_cut_count;
  // Minimum cuts that contain a whole fiber S_i.
  std::optional<std::uint64_t> fiber_containing_cuts;
  std::optional<CutSet> non_isolating_cut;
  // The product is disconnected (delta(G) = 0); the super-kappa claim holds
  // vacuously.
  bool vacuous = false;
  std::int64_t runtime_ms = 0;
  ReportStatus status = ReportStatus::kOk;
  Severity severity = Severity::kNone;
  std::string message;

  bool violation() const { return severity == Severity::kContradictsPaper; }
};

// kappa(G x K_n) by max-flow on the product versus min{n kappa(G), (n-1) delta(G)}
// from the factor.
VerificationReport verify_kappa_formula(const Graph& g, std::size_t n);

// Enumerates every minimum separating set of G x K_n and checks that each one
// isolates a vertex. Also fills the kappa formula fields. Requires
// kappa(G) = delta(G); throws SizeLimitError when the scan exceeds `budget`.
VerificationReport verify_main_theorem(const Graph& g, std::size_t n,
                                       std::uint64_t budget = kDefaultSubsetBudget);

struct Filters {
  bool connected = false;
  bool kd_equal = false;
  bool bipartite = false;
  bool nonbipartite = false;

  bool accepts(const Graph& g) const;
};

struct BatchItem {
  std::string source;
  std::optional<Graph> graph;  // unset for unreadable input
  std::string error;
};

struct BatchOptions {
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultSubsetBudget;
  bool record_timing = false;
};

struct BatchSummary {
  std::uint64_t instances = 0;
  std::uint64_t holds = 0;
  std::uint64_t violations = 0;
  std::uint64_t skips = 0;
};

struct BatchResult {
  std::vector<VerificationReport> reports;
  BatchSummary summary;
};

// One report per (graph, n) with graph passing `filters`, in corpus order then
// n order, plus one error report per unreadable item. Graphs with
// kappa = delta get the full super-kappa check; the rest only the kappa
// formula. Per-instance failures become skip/error reports.
BatchResult batch_verify(const std::vector<BatchItem>& corpus, const std::vector<std::size_t>& n_values,
                         const Filters& filters, const BatchOptions& options);

std::vector<BatchItem> to_batch_items(const std::vector<Graph>& graphs);

// check_lemmas over every eligible graph (connected, kappa = delta > 0, and
// passing `filters`), seeding instance i with derive_seed(seed, i).
std::vector<LemmaCheck> batch_check_lemmas(const std::vector<BatchItem>& corpus, std::size_t n,
                                           std::size_t trials, std::uint64_t seed,
                                           const Filters& filters, std::size_t workers);

}  // namespace kronkit

#endif  // KRONKIT_ANALYSIS_HPP_
