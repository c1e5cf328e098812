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

// Property-based acceptance suite. Prints one PASS/FAIL line per criterion
// and exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kronkit/analysis.hpp"
#include "kronkit/connectivity.hpp"
#include "kronkit/corpus.hpp"
#include "kronkit/graph6.hpp"
#include "kronkit/product.hpp"
#include "kronkit/report.hpp"
#include "oracle.hpp"

namespace {

using namespace kronkit;

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kSampledPairs = 5000;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::vector<std::pair<const Graph*, const Graph*>> sample_pairs(const std::vector<Graph>& pool,
                                                                std::uint64_t seed) {
  std::vector<std::pair<const Graph*, const Graph*>> out;
  const std::uint64_t total = pool.size() * pool.size();
  for (std::size_t k = 0; k < kSampledPairs; ++k) {
    const std::uint64_t pick = derive_seed(seed, k) % total;
    out.emplace_back(&pool[pick / pool.size()], &pool[pick % pool.size()]);
  }
  return out;
}

Outcome product_identities(const std::vector<Graph>& pool) {
  std::size_t mismatches = 0;
  for (const auto& [a, b] : sample_pairs(pool, kSeed)) {
    const ProductGraph p = kronecker(*a, *b);
    const Graph& h = p.graph();
    bool ok = h.order() == a->order() * b->order() && h.edge_count() == 2 * a->edge_count() * b->edge_count();
    for (Vertex u = 0; ok && u < a->order(); ++u) {
      for (Vertex v = 0; ok && v < b->order(); ++v) {
        ok = h.degree(p.index(u, v)) == a->degree(u) * b->degree(v);
      }
    }
    ok = ok && oracle::to_matrix(h) == oracle::kronecker(oracle::to_matrix(*a), oracle::to_matrix(*b));
    if (!ok) ++mismatches;
  }
  return {mismatches == 0, std::to_string(kSampledPairs) + " pairs, " + std::to_string(mismatches) + " mismatches", {}};
}

Outcome weichsel(const std::vector<Graph>& pool) {
  std::size_t disagreements = 0;
  std::size_t connected = 0;
  for (const auto& [a, b] : sample_pairs(pool, derive_seed(kSeed, 1))) {
    const bool traversal = is_connected(kronecker(*a, *b).graph());
    if (traversal) ++connected;
    if (weichsel_connected(*a, *b) != traversal) ++disagreements;
  }
  return {disagreements == 0,
          std::to_string(kSampledPairs) + " pairs (" + std::to_string(connected) + " connected products), " +
              std::to_string(disagreements) + " disagreements",
          {}};
}

Outcome flow_vs_brute_force(const std::vector<Graph>& connected8) {
  std::size_t disagreements = 0;
  for (const Graph& g : connected8) {
    if (vertex_connectivity(g) != brute_force_connectivity(g)) ++disagreements;
  }
  return {disagreements == 0,
          std::to_string(connected8.size()) + " graphs, " + std::to_string(disagreements) + " disagreements", {}};
}

Outcome kappa_formula(const std::vector<Graph>& connected6) {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t cross_checked = 0;
  Outcome out;
  for (const Graph& g : connected6) {
    for (std::size_t n : {3u, 4u}) {
      ++instances;
      // Factor side by subset scan, product side by max-flow.
      const std::size_t rhs = std::min(n * brute_force_connectivity(g), (n - 1) * g.min_degree());
      const Graph h = kronecker_with_complete(g, n).graph();
      const std::size_t lhs = vertex_connectivity(h);
      bool ok = lhs == rhs;
      if (h.order() <= 16) {
        ++cross_checked;
        ok = ok && brute_force_connectivity(h) == lhs;
      }
      if (!ok) {
        ++violations;
        out.notes.push_back(encode_graph6(g) + " n=" + std::to_string(n) + ": kappa " + std::to_string(lhs) +
                            " vs formula " + std::to_string(rhs));
      }
    }
  }
  out.pass = violations == 0;
  out.detail = std::to_string(instances) + " instances (" + std::to_string(cross_checked) +
               " products also brute-forced), " + std::to_string(violations) + " violations";
  return out;
}

std::string reports_as_jsonl(const BatchResult& result) {
  std::ostringstream out;
  for (const VerificationReport& r : result.reports) out << report_to_json(r).dump() << '\n';
  out << summary_to_json(result.summary).dump() << '\n';
  return out.str();
}

BatchResult super_kappa_sweep(const std::vector<BatchItem>& corpus, std::size_t workers, bool nonbipartite) {
  Filters filters;
  filters.connected = true;
  filters.kd_equal = true;
  filters.nonbipartite = nonbipartite;
  BatchOptions options;
  options.workers = workers;
  return batch_verify(corpus, {3}, filters, options);
}

Outcome main_theorem(const std::vector<BatchItem>& corpus) {
  const BatchResult result = super_kappa_sweep(corpus, 1, false);
  Outcome out;
  for (const VerificationReport& r : result.reports) {
    if (r.severity == Severity::kContradictsPaper) {
      out.notes.push_back("contradicts-paper: " + r.graph6 + " n=3, " + std::to_string(*r.min_cut_count) +
                          " minimum cuts, witness " + cut_to_json(*r.non_isolating_cut).dump());
    }
  }
  out.pass = result.summary.violations == 0 && result.summary.skips == 0;
  out.detail = std::to_string(result.summary.instances) + " instances, " + std::to_string(result.summary.holds) +
               " hold, " + std::to_string(result.summary.violations) + " violations, " +
               std::to_string(result.summary.skips) + " skipped";
  const BatchResult nonbip = super_kappa_sweep(corpus, 1, true);
  out.notes.push_back("non-bipartite factors only: " + std::to_string(nonbip.summary.instances) + " instances, " +
                      std::to_string(nonbip.summary.violations) + " violations");
  return out;
}

Outcome cycles() {
  std::string mismatched;
  for (std::size_t k = 3; k <= 10; ++k) {
    if (is_super_kappa(make_cycle(k)) != (k <= 5)) mismatched += " C" + std::to_string(k);
  }
  return {mismatched.empty(), mismatched.empty() ? "C3..C10 match" : "mismatch:" + mismatched, {}};
}

Outcome lemmas(const std::vector<BatchItem>& corpus) {
  const std::vector<LemmaCheck> checks = batch_check_lemmas(corpus, 3, 20, kSeed, Filters{}, 1);
  std::size_t samples = 0;
  std::size_t residue_samples = 0;
  std::size_t gstar_bad = 0;
  std::size_t residue_bad = 0;
  std::size_t exhausted = 0;
  for (const LemmaCheck& c : checks) {
    samples += c.trials.size();
    if (c.residue_check_applies) residue_samples += c.trials.size();
    gstar_bad += c.gstar_violations();
    residue_bad += c.residue_violations();
    if (c.exhausted) ++exhausted;
  }
  Outcome out;
  out.pass = checks.size() >= 50 && samples >= 1000 && gstar_bad == 0 && residue_bad == 0;
  out.detail = std::to_string(samples) + " sets over " + std::to_string(checks.size()) + " graphs (" +
               std::to_string(residue_samples) + " non-bipartite), G* disconnected " + std::to_string(gstar_bad) +
               ", residue split " + std::to_string(residue_bad);
  if (exhausted > 0) out.notes.push_back(std::to_string(exhausted) + " graphs ran out of valid sets");
  return out;
}

Outcome vertex_deletion(const std::vector<Graph>& connected8) {
  std::size_t checked = 0;
  std::size_t violations = 0;
  for (const Graph& g : connected8) {
    if (g.order() < 2) continue;
    const std::size_t kappa = vertex_connectivity(g);
    const std::size_t delta = g.min_degree();
    for (Vertex v = 0; v < g.order(); ++v) {
      const Graph d = delete_vertex(g, v);
      ++checked;
      if (d.min_degree() + 1 < delta || vertex_connectivity(d) + 1 < kappa) ++violations;
    }
  }
  return {violations == 0,
          std::to_string(checked) + " vertex deletions, " + std::to_string(violations) + " violations", {}};
}

Outcome determinism(const std::vector<BatchItem>& corpus) {
  const std::string one = reports_as_jsonl(super_kappa_sweep(corpus, 1, false));
  const std::string four = reports_as_jsonl(super_kappa_sweep(corpus, 4, false));
  return {one == four, std::to_string(one.size()) + " bytes, workers 1 vs 4 " + (one == four ? "identical" : "differ"),
          {}};
}

}  // namespace

int main() {
  const std::vector<Graph> connected6 = connected_graphs_up_to(6);
  const std::vector<Graph> connected8 = connected_graphs_up_to(8);
  const std::vector<Graph> pairs_pool = connected_graphs_up_to(6, 2);
  const std::vector<BatchItem> corpus6 = to_batch_items(connected6);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"product order, size and degree identities", [&] { return product_identities(pairs_pool); }},
      {"product connectivity iff a factor is non-bipartite", [&] { return weichsel(pairs_pool); }},
      {"max-flow connectivity matches subset scan", [&] { return flow_vs_brute_force(connected8); }},
      {"kappa(G x K_n) = min(n kappa, (n-1) delta)", [&] { return kappa_formula(connected6); }},
      {"maximally connected G gives super-kappa G x K_3", [&] { return main_theorem(corpus6); }},
      {"cycles C3..C5 super-kappa, C6..C10 not", [] { return cycles(); }},
      {"G* connected and residues unsplit", [&] { return lemmas(corpus6); }},
      {"vertex deletion drops delta and kappa by at most one", [&] { return vertex_deletion(connected8); }},
      {"super-kappa sweep is worker-count independent", [&] { return determinism(corpus6); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what(), {}};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << outcome.detail << " (" << std::fixed << std::setprecision(1) << seconds << " s)\n";
    for (const std::string& note : outcome.notes) std::cout << "       " << note << '\n';
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
