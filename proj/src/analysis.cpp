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

#include "kronkit/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "kronkit/errors.hpp"
#include "kronkit/graph6.hpp"

namespace kronkit {
namespace {

void require_fiber_count(std::size_t n) {
  if (n < 3) throw InvalidArgument("complete factor K_n needs n >= 3, got " + std::to_string(n));
}

void require_lemma_hypotheses(const Graph& g, std::size_t n) {
  require_fiber_count(n);
  if (!is_connected(g)) throw PreconditionError("factor graph must be connected");
  const std::size_t delta = g.min_degree();
  if (delta == 0 || vertex_connectivity(g) != delta) {
    throw PreconditionError("factor graph must satisfy kappa = delta > 0");
  }
}

// Uniform draw from [0, bound) without modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t universe, std::size_t size) {
  std::vector<Vertex> pool(universe);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  VertexSet out(universe);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + uniform_below(rng, universe - i);
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

// Runs job(i) for i in [0, count) on up to `workers` threads.
template <typename Job>
void run_indexed(std::size_t count, std::size_t workers, const Job& job) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ResidueSystem build_residue_system(const Graph& g, std::size_t n, const VertexSet& removed) {
  require_fiber_count(n);
  if (!is_connected(g)) throw PreconditionError("factor graph must be connected");
  ProductGraph product = kronecker_with_complete(g, n);
  const std::size_t order = product.graph().order();
  if (removed.universe() != order) {
    throw InvalidArgument("removed set must range over the " + std::to_string(order) +
                          " product vertices");
  }

  ResidueSystem rs{std::move(product), removed, {}, {}};
  const Graph& h = rs.product.graph();
  rs.conditions.size_ok = removed.size() == (n - 1) * g.min_degree();
  rs.conditions.residues_nonempty = true;
  for (Fiber& fiber : fibers(rs.product)) {
    VertexSet residue = fiber.members - removed;
    if (residue.empty()) rs.conditions.residues_nonempty = false;
    rs.residues.push_back(std::move(residue));
  }
  const VertexSet alive = h.all_vertices() - removed;
  rs.conditions.no_isolated = std::none_of(alive.begin(), alive.end(), [&](Vertex v) {
    return !h.neighbors(v).intersects(alive);
  });
  return rs;
}

ResidueSystem build_residue_system(const Graph& g, std::size_t n, const std::vector<Vertex>& removed) {
  const std::size_t order = g.order() * n;
  for (Vertex v : removed) {
    if (v >= order) throw InvalidArgument("product vertex " + std::to_string(v) + " out of range");
  }
  return build_residue_system(g, n, VertexSet::of(order, removed));
}

GStarGraph build_gstar(const ResidueSystem& rs) {
  const std::size_t m = rs.residues.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (rs.residues[i].empty()) {
      throw PreconditionError("residue of fiber " + std::to_string(i) + " is empty");
    }
  }
  const Graph& h = rs.product.graph();
  const auto n = static_cast<Vertex>(rs.product.factor2_order());
  GStarGraph gstar{Graph(m), {}, {}};
  for (Vertex i = 0; i < m; ++i) {
    if (rs.residues[i].size() == 1) gstar.singleton_classes.push_back(i);
    for (Vertex a : rs.residues[i]) {
      for (Vertex b : h.neighbors(a) - rs.removed) {
        const Vertex j = b / n;
        if (j <= i) continue;
        const Edge key{i, j};
        if (!gstar.edge_witnesses.contains(key)) {
          gstar.graph.add_edge(i, j);
          gstar.edge_witnesses.emplace(key, Edge{a, b});
        }
      }
    }
  }
  return gstar;
}

bool fiber_deletion_identity_holds(const Graph& g, std::size_t n, const VertexSet& removed,
                                   Vertex fiber) {
  const ProductGraph full = kronecker_with_complete(g, n);
  if (fiber >= g.order()) throw InvalidArgument("fiber index out of range");
  const Fiber whole = fibers(full)[fiber];
  if (!whole.members.is_subset_of(removed)) {
    throw PreconditionError("fiber " + std::to_string(fiber) + " is not contained in S");
  }
  if (g.order() < 2) return true;
  const ProductGraph reduced = kronecker_with_complete(delete_vertex(g, fiber), n);

  auto rename = [&](Vertex x) {
    const ProductVertex pv = full.vertex(x);
    return reduced.index(pv.factor1 - (pv.factor1 > fiber ? 1 : 0), pv.factor2);
  };
  VertexSet reduced_removed(reduced.graph().order());
  for (Vertex x : removed - whole.members) reduced_removed.insert(rename(x));

  const VertexSet alive_full = full.graph().all_vertices() - removed;
  const VertexSet alive_reduced = reduced.graph().all_vertices() - reduced_removed;
  if (alive_full.size() != alive_reduced.size()) return false;
  for (Vertex x : alive_full) {
    if (!alive_reduced.contains(rename(x))) return false;
    for (Vertex y : alive_full) {
      if (full.graph().adjacent(x, y) != reduced.graph().adjacent(rename(x), rename(y))) return false;
    }
  }
  return true;
}

std::size_t LemmaCheck::gstar_violations() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const LemmaTrial& t) { return !t.gstar_connected; }));
}

std::size_t LemmaCheck::residue_violations() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const LemmaTrial& t) {
    return t.residues_unsplit.has_value() && !*t.residues_unsplit;
  }));
}

LemmaCheck check_lemmas(const Graph& g, std::size_t n, std::size_t trials, std::uint64_t seed,
                        std::uint64_t rejection_cap) {
  require_lemma_hypotheses(g, n);
  LemmaCheck check;
  check.graph6 = encode_graph6(g);
  check.n = n;
  check.seed = seed;
  check.residue_check_applies = !is_bipartite(g);

  const ProductGraph product = kronecker_with_complete(g, n);
  const Graph& h = product.graph();
  const std::size_t size = (n - 1) * g.min_degree();
  std::mt19937_64 rng(seed);

  for (std::size_t t = 0; t < trials; ++t) {
    std::optional<ResidueSystem> rs;
    for (std::uint64_t draw = 0; draw < rejection_cap && !rs; ++draw) {
      ResidueSystem candidate = build_residue_system(g, n, random_subset(rng, h.order(), size));
      if (!candidate.conditions.residues_nonempty) {
        ++check.rejected_residue_empty;
      } else if (!candidate.conditions.no_isolated) {
        ++check.rejected_isolated;
      } else {
        rs = std::move(candidate);
      }
    }
    if (!rs) {
      check.exhausted = true;
      check.message = "no valid S found in " + std::to_string(rejection_cap) + " draws (trial " +
                      std::to_string(t) + ")";
      break;
    }

    LemmaTrial trial;
    trial.removed = rs->removed.to_vector();
    const GStarGraph gstar = build_gstar(*rs);
    trial.gstar_connected = is_connected(gstar.graph);
    trial.singleton_classes = gstar.singleton_classes.size();
    if (check.residue_check_applies) {
      const VertexSet alive = h.all_vertices() - rs->removed;
      trial.residues_unsplit = true;
      for (Vertex i = 0; i < rs->residues.size(); ++i) {
        const VertexSet& residue = rs->residues[i];
        if (!residue.is_subset_of(reachable(h, alive, static_cast<Vertex>(residue.first())))) {
          trial.residues_unsplit = false;
          trial.split_fiber = i;
          break;
        }
      }
    }
    check.trials.push_back(std::move(trial));
  }
  return check;
}

LemmaCheck check_lemma_gstar_connected(const Graph& g, std::size_t n, std::size_t trials,
                                       std::uint64_t seed) {
  LemmaCheck check = check_lemmas(g, n, trials, seed);
  check.residue_check_applies = false;
  for (LemmaTrial& t : check.trials) {
    t.residues_unsplit.reset();
    t.split_fiber.reset();
  }
  return check;
}

LemmaCheck check_lemma_residue_component(const Graph& g, std::size_t n, std::size_t trials,
                                         std::uint64_t seed) {
  require_lemma_hypotheses(g, n);
  if (is_bipartite(g)) throw PreconditionError("residue containment needs a non-bipartite factor");
  return check_lemmas(g, n, trials, seed);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined state.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

VerificationReport verify_kappa_formula(const Graph& g, std::size_t n) {
  require_fiber_count(n);
  if (g.empty()) throw InvalidArgument("factor graph is empty");
  VerificationReport report;
  report.graph6 = encode_graph6(g);
  report.n = n;
  report.kappa_G = vertex_connectivity(g);
  report.delta_G = g.min_degree();
  report.formula_rhs = std::min(n * *report.kappa_G, (n - 1) * *report.delta_G);
  report.product_kappa = vertex_connectivity(kronecker_with_complete(g, n).graph());
  report.theorem11_holds = *report.product_kappa == *report.formula_rhs;
  if (!*report.theorem11_holds) {
    report.severity = Severity::kContradictsPaper;
    report.message = "kappa(G x K_n) differs from min{n kappa(G), (n-1) delta(G)}";
  }
  return report;
}

namespace {

// Fills the super-kappa fields of a report whose kappa fields are set.
void fill_super_kappa(VerificationReport& report, const Graph& g, std::size_t n, std::uint64_t budget) {
  const ProductGraph product = kronecker_with_complete(g, n);
  const Graph& h = product.graph();
  if (!is_connected(h)) {
    report.vacuous = true;
    report.super_kappa_verdict = true;
    report.min_cut_count = 0;
    report.fiber_containing_cuts = 0;
    return;
  }

  std::uint64_t count = 0;
  std::uint64_t fiber_containing = 0;
  std::optional<CutSet> counterexample;
  scan_separating_sets(h, *report.product_kappa, budget, [&](const VertexSet& s) {
    ++count;
    CutSet cut = classify_cut(product, s);
    if (cut.contained_fiber) ++fiber_containing;
    if (!cut.isolates && !counterexample) counterexample = std::move(cut);
    return true;
  });
  if (count == 0) {
    throw PreconditionError("no separating set of size kappa(G x K_n) found; connectivity is inconsistent");
  }
  report.min_cut_count = count;
  report.fiber_containing_cuts = fiber_containing;
  report.super_kappa_verdict = !counterexample.has_value();
  if (counterexample) {
    report.non_isolating_cut = std::move(counterexample);
    report.severity = Severity::kContradictsPaper;
    if (!report.message.empty()) report.message += "; ";
    report.message += "minimum cut of G x K_n isolates no vertex";
  }
}

}  // namespace

VerificationReport verify_main_theorem(const Graph& g, std::size_t n, std::uint64_t budget) {
  VerificationReport report = verify_kappa_formula(g, n);
  if (*report.kappa_G != *report.delta_G) {
    throw PreconditionError("super-kappa check needs kappa(G) = delta(G)");
  }
  fill_super_kappa(report, g, n, budget);
  return report;
}

bool Filters::accepts(const Graph& g) const {
  if (g.empty()) return false;
  if (connected && !is_connected(g)) return false;
  if (kd_equal && vertex_connectivity(g) != g.min_degree()) return false;
  if (bipartite || nonbipartite) {
    const bool bip = is_bipartite(g);
    if (bipartite && !bip) return false;
    if (nonbipartite && bip) return false;
  }
  return true;
}

std::vector<BatchItem> to_batch_items(const std::vector<Graph>& graphs) {
  std::vector<BatchItem> items;
  items.reserve(graphs.size());
  for (const Graph& g : graphs) items.push_back({g.label(), g, {}});
  return items;
}

BatchResult batch_verify(const std::vector<BatchItem>& corpus, const std::vector<std::size_t>& n_values,
                         const Filters& filters, const BatchOptions& options) {
  struct Task {
    const BatchItem* item;
    std::size_t n;
  };
  std::vector<Task> tasks;
  for (const BatchItem& item : corpus) {
    if (!item.graph) {
      tasks.push_back({&item, 0});
      continue;
    }
    if (!filters.accepts(*item.graph)) continue;
    for (std::size_t n : n_values) tasks.push_back({&item, n});
  }

  BatchResult result;
  result.reports.resize(tasks.size());
  run_indexed(tasks.size(), options.workers, [&](std::size_t i) {
    const Task& task = tasks[i];
    VerificationReport& report = result.reports[i];
    const auto start = std::chrono::steady_clock::now();
    if (!task.item->graph) {
      report.status = ReportStatus::kError;
      report.message = task.item->error;
      report.source = task.item->source;
      return;
    }
    const Graph& g = *task.item->graph;
    try {
      report = verify_kappa_formula(g, task.n);
      if (*report.kappa_G == *report.delta_G) fill_super_kappa(report, g, task.n, options.budget);
    } catch (const SizeLimitError& e) {
      report.status = ReportStatus::kSkipped;
      if (!report.message.empty()) report.message += "; ";
      report.message += e.what();
    } catch (const std::exception& e) {
      report.status = ReportStatus::kError;
      if (!report.message.empty()) report.message += "; ";
      report.message += e.what();
    }
    report.graph6 = encode_graph6(g);
    report.n = task.n;
    report.source = task.item->source;
    if (options.record_timing) {
      report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
  });

  for (const VerificationReport& r : result.reports) {
    ++result.summary.instances;
    if (r.violation()) {
      ++result.summary.violations;
    } else if (r.status == ReportStatus::kOk) {
      ++result.summary.holds;
    } else {
      ++result.summary.skips;
    }
  }
  return result;
}

std::vector<LemmaCheck> batch_check_lemmas(const std::vector<BatchItem>& corpus, std::size_t n,
                                           std::size_t trials, std::uint64_t seed,
                                           const Filters& filters, std::size_t workers) {
  std::vector<const Graph*> eligible;
  for (const BatchItem& item : corpus) {
    if (!item.graph || !filters.accepts(*item.graph)) continue;
    const Graph& g = *item.graph;
    if (!is_connected(g) || g.min_degree() == 0 || vertex_connectivity(g) != g.min_degree()) continue;
    eligible.push_back(&g);
  }
  std::vector<LemmaCheck> out(eligible.size());
  run_indexed(eligible.size(), workers, [&](std::size_t i) {
    out[i] = check_lemmas(*eligible[i], n, trials, derive_seed(seed, i));
  });
  return out;
}

}  // namespace kronkit
