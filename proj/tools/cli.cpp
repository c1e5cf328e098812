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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "kronkit/corpus.hpp"
#include "kronkit/errors.hpp"
#include "kronkit/graph6.hpp"
#include "kronkit/product.hpp"
#include "kronkit/report.hpp"

namespace kronkit::cli {
namespace {

// Bad flags, values or inputs; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenOptions {
  std::string kind;
  std::size_t size = 0;
  double probability = 0.5;
};

struct ExtraOptions {
  std::vector<std::string> filters;
  std::string format = "jsonl";
  std::string remove;
  std::size_t trials = 100;
  std::string mapping;
  bool budget_given = false;
  GenOptions gen;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("KRONKIT_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("KRONKIT_BUDGET is not an integer: ") + env);
  }
  return kDefaultSubsetBudget;
}

Filters parse_filters(const std::vector<std::string>& names) {
  Filters f;
  for (const std::string& name : names) {
    if (name == "connected") {
      f.connected = true;
    } else if (name == "kd-equal") {
      f.kd_equal = true;
    } else if (name == "bipartite") {
      f.bipartite = true;
    } else if (name == "nonbipartite") {
      f.nonbipartite = true;
    } else {
      throw UsageError("unknown filter '" + name + "'");
    }
  }
  if (f.bipartite && f.nonbipartite) throw UsageError("--filter bipartite and nonbipartite exclude each other");
  return f;
}

std::vector<Vertex> parse_id_list(const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      ids.push_back(static_cast<Vertex>(value));
    } catch (const std::exception&) {
      throw UsageError("bad vertex id '" + token + "' in --remove");
    }
  }
  return ids;
}

std::vector<BatchItem> load_graphs(const RunConfig& config) {
  std::vector<BatchItem> items;
  for (std::size_t i = 0; i < config.inline_graphs.size(); ++i) {
    try {
      items.push_back({"--g6", parse_graph6(config.inline_graphs[i]), {}});
    } catch (const std::exception& e) {
      throw UsageError("--g6 '" + config.inline_graphs[i] + "': " + e.what());
    }
  }
  std::vector<BatchItem> files = ingest_corpus(config.input_paths);
  items.insert(items.end(), std::make_move_iterator(files.begin()), std::make_move_iterator(files.end()));
  if (config.all_graphs) {
    if (config.max_order == 0) throw UsageError("--all-graphs needs --max-order");
    try {
      for (Graph& g : all_graphs_up_to(config.max_order)) items.push_back({"", std::move(g), {}});
    } catch (const SizeLimitError& e) {
      throw UsageError(e.what());
    }
  }
  return items;
}

const Graph& single_graph(const std::vector<BatchItem>& items, const std::string& command) {
  if (items.size() != 1 || !items.front().graph) {
    throw UsageError(command + " takes exactly one graph");
  }
  return *items.front().graph;
}

std::size_t single_n(const RunConfig& config, std::size_t fallback, std::size_t minimum) {
  if (config.n_values.size() > 1) throw UsageError("--n given more than once");
  const std::size_t n = config.n_values.empty() ? fallback : config.n_values.front();
  if (n < minimum) throw UsageError("--n must be at least " + std::to_string(minimum));
  return n;
}

void write_line(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_gen(const RunConfig& config, const ExtraOptions& extra, std::ostream& out) {
  const GenOptions& gen = extra.gen;
  if (gen.kind == "complete") {
    out << encode_graph6(make_complete(gen.size)) << '\n';
  } else if (gen.kind == "cycle") {
    out << encode_graph6(make_cycle(gen.size)) << '\n';
  } else if (gen.kind == "random") {
    out << encode_graph6(random_graph(gen.size, gen.probability, config.seed)) << '\n';
  } else if (gen.kind == "all") {
    const std::size_t order = gen.size != 0 ? gen.size : config.max_order;
    if (order == 0) throw UsageError("gen all needs an order");
    for (const Graph& g : all_graphs(order)) {
      if (config.filters.accepts(g)) out << encode_graph6(g) << '\n';
    }
  } else {
    throw UsageError("gen kind must be complete, cycle, random or all");
  }
  return kExitOk;
}

int cmd_product(const RunConfig& config, const ExtraOptions& extra, std::ostream& out) {
  const std::vector<BatchItem> items = load_graphs(config);
  std::optional<ProductGraph> product;
  if (items.size() == 2 && items[0].graph && items[1].graph) {
    if (!config.n_values.empty()) throw UsageError("product takes either two graphs or one graph and --n");
    product = kronecker(*items[0].graph, *items[1].graph);
  } else {
    const Graph& g = single_graph(items, "product");
    product = kronecker_with_complete(g, single_n(config, 3, 2));
  }
  out << encode_graph6(product->graph()) << '\n';
  if (!extra.mapping.empty()) {
    std::ofstream map(extra.mapping);
    if (!map) throw std::runtime_error("cannot write mapping file " + extra.mapping);
    write_linearization(map, *product);
  }
  return kExitOk;
}

int cmd_kappa(const RunConfig& config, std::ostream& out) {
  for (const BatchItem& item : load_graphs(config)) {
    Json j;
    j["source"] = item.source;
    if (!item.graph) {
      j["error"] = item.error;
      write_line(out, j);
      continue;
    }
    const Graph& g = *item.graph;
    j["graph6"] = encode_graph6(g);
    const std::size_t kappa = vertex_connectivity(g);
    j["kappa"] = kappa;
    j["delta"] = g.min_degree();
    j["maximally_connected"] = kappa == g.min_degree();
    if (config.format == OutputFormat::kTable) {
      out << j["graph6"].get<std::string>() << "  kappa=" << kappa << " delta=" << g.min_degree() << '\n';
    } else {
      write_line(out, j);
    }
  }
  return kExitOk;
}

int cmd_cuts(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<BatchItem> items = load_graphs(config);
  const Graph& g = single_graph(items, "cuts");
  if (!is_connected(g)) {
    err << "graph is disconnected: the only minimum separating set is empty\n";
    return kExitOk;
  }
  for (const CutSet& cut : enumerate_min_cuts(g, config.budget)) write_line(out, cut_to_json(cut));
  return kExitOk;
}

int cmd_super_kappa(const RunConfig& config, std::ostream& out) {
  int status = kExitOk;
  for (const BatchItem& item : load_graphs(config)) {
    Json j;
    j["source"] = item.source;
    if (!item.graph) {
      j["error"] = item.error;
      write_line(out, j);
      status = kExitUsage;
      continue;
    }
    const Graph& g = *item.graph;
    j["graph6"] = encode_graph6(g);
    try {
      const ConnectivityResult r = analyze_connectivity(g, config.budget);
      j["kappa"] = r.kappa;
      j["delta"] = r.delta;
      j["maximally_connected"] = r.maximally_connected;
      j["super_kappa"] = r.super_kappa;
      j["min_cut_count"] = r.min_cuts.size();
      j["non_isolating_cut"] = nullptr;
      for (const CutSet& cut : r.min_cuts) {
        if (!cut.isolates) {
          j["non_isolating_cut"] = cut_to_json(cut);
          break;
        }
      }
    } catch (const SizeLimitError& e) {
      j["error"] = e.what();
      if (status == kExitOk) status = kExitSkipped;
    }
    if (config.format == OutputFormat::kTable) {
      out << j["graph6"].get<std::string>() << "  super-kappa="
          << (j.contains("super_kappa") ? (j["super_kappa"].get<bool>() ? "yes" : "no") : "?") << '\n';
    } else {
      write_line(out, j);
    }
  }
  return status;
}

int cmd_gstar(const RunConfig& config, const ExtraOptions& extra, std::ostream& out) {
  const std::size_t n = single_n(config, 3, 3);
  const std::vector<BatchItem> items = load_graphs(config);
  if (!extra.remove.empty()) {
    const Graph& g = single_graph(items, "gstar --remove");
    const ResidueSystem rs = build_residue_system(g, n, parse_id_list(extra.remove));
    if (!rs.conditions.residues_nonempty) {
      Json j;
      j["removed"] = rs.removed.to_vector();
      j["conditions"] = Json{{"size_ok", rs.conditions.size_ok},
                             {"residues_nonempty", false},
                             {"no_isolated", rs.conditions.no_isolated}};
      j["gstar_graph6"] = nullptr;
      write_line(out, j);
      return kExitOk;
    }
    write_line(out, gstar_to_json(rs, build_gstar(rs)));
    return kExitOk;
  }

  const std::vector<LemmaCheck> checks =
      batch_check_lemmas(items, n, extra.trials, config.seed, config.filters, config.workers);
  BatchSummary summary;
  for (const LemmaCheck& check : checks) {
    write_line(out, lemma_check_to_json(check, false));
    ++summary.instances;
    if (check.gstar_violations() > 0 || check.residue_violations() > 0) {
      ++summary.violations;
    } else if (check.exhausted) {
      ++summary.skips;
    } else {
      ++summary.holds;
    }
  }
  write_line(out, summary_to_json(summary));
  if (summary.violations > 0) return kExitViolation;
  return summary.skips > 0 ? kExitSkipped : kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  std::vector<std::size_t> n_values = config.n_values.empty() ? std::vector<std::size_t>{3} : config.n_values;
  for (std::size_t n : n_values) {
    if (n < 3) throw UsageError("--n must be at least 3 for " + config.command);
  }
  const std::vector<BatchItem> items = load_graphs(config);
  if (items.empty() && config.inline_graphs.empty() && config.input_paths.empty() && !config.all_graphs) {
    throw UsageError(config.command + " needs --g6, --input or --all-graphs");
  }
  BatchOptions options;
  options.workers = config.workers;
  options.budget = config.budget;
  options.record_timing = config.timing;
  const BatchResult result = batch_verify(items, n_values, config.filters, options);
  emit_report(result, config.format, out);

  if (result.summary.violations > 0) return kExitViolation;
  for (const VerificationReport& r : result.reports) {
    if (r.status == ReportStatus::kError && r.n == 0) return kExitUsage;
  }
  return result.summary.skips > 0 ? kExitSkipped : kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& config, ExtraOptions& extra) {
  cmd->add_option("--g6", config.inline_graphs, "Inline graph6 string (repeatable)");
  cmd->add_option("--input", config.input_paths, "File of newline-delimited graph6 (repeatable)");
  cmd->add_flag("--all-graphs", config.all_graphs, "Every graph up to --max-order, one per isomorphism class");
  cmd->add_option("--max-order", config.max_order, "Largest order for --all-graphs");
  cmd->add_option("--n", config.n_values, "Order of the complete factor K_n (repeatable for verify)");
  cmd->add_option("--seed", config.seed, "Master seed for all randomness");
  cmd->add_option_function<std::uint64_t>(
      "--budget",
      [&](const std::uint64_t& b) {
        config.budget = b;
        extra.budget_given = true;
      },
      "Maximum number of subsets an exhaustive cut scan may visit");
  cmd->add_option("--workers", config.workers, "Worker threads");
  cmd->add_option("--format", extra.format, "jsonl or table")->check(CLI::IsMember({"jsonl", "table"}));
  cmd->add_option("--output", config.output, "Write to this file instead of standard output");
  cmd->add_option("--filter", extra.filters, "connected, kd-equal, bipartite or nonbipartite (repeatable)");
  cmd->add_flag("--timing", config.timing, "Record per-instance runtime_ms (breaks byte stability)");
}

}  // namespace

std::vector<BatchItem> ingest_corpus(const std::vector<std::string>& paths) {
  std::vector<BatchItem> items;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    Graph6Reader reader(in);
    while (auto entry = reader.next()) {
      const std::string source = path + ":" + std::to_string(entry->line);
      if (entry->ok()) {
        items.push_back({source, entry->graph(), {}});
      } else {
        items.push_back({source, std::nullopt, entry->error().message});
      }
    }
  }
  return items;
}

void emit_report(const BatchResult& result, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kTable) {
    write_report_table(out, result.reports);
    const BatchSummary& s = result.summary;
    out << "instances=" << s.instances << " holds=" << s.holds << " violations=" << s.violations
        << " skips=" << s.skips << '\n';
    return;
  }
  for (const VerificationReport& r : result.reports) write_line(out, report_to_json(r));
  write_line(out, summary_to_json(result.summary));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  ExtraOptions extra;
  config.workers = std::max(1U, std::thread::hardware_concurrency());

  CLI::App app{"Kronecker product connectivity toolkit", "kronkit"};
  app.require_subcommand(1);
  std::vector<CLI::App*> commands;
  const std::pair<const char*, const char*> subcommands[] = {
      {"product", "Kronecker product G x K_n (or G1 x G2 with two --g6) as graph6"},
      {"kappa", "Vertex connectivity and minimum degree"},
      {"cuts", "Every minimum separating set, one JSON line each"},
      {"super-kappa", "Whether every minimum separating set isolates a vertex"},
      {"gstar", "Residues and auxiliary graph G* for --remove, or sampled lemma checks"},
      {"verify", "Check kappa(G x K_n) = min(n kappa, (n-1) delta) and super-kappa"},
      {"batch", "verify over graph6 files given with --input"},
  };
  for (const auto& [name, description] : subcommands) {
    CLI::App* cmd = app.add_subcommand(name, description);
    add_common_options(cmd, config, extra);
    commands.push_back(cmd);
  }
  commands[0]->add_option("--mapping", extra.mapping, "Write 'linear_index factor1 factor2' rows here");
  commands[4]->add_option("--remove", extra.remove, "Comma-separated product vertex ids of S");
  commands[4]->add_option("--trials", extra.trials, "Sampled sets S per graph");
  CLI::App* gen = app.add_subcommand("gen", "Emit graph6 for generated graphs");
  gen->add_option("kind", extra.gen.kind, "complete, cycle, random or all")->required();
  gen->add_option("size", extra.gen.size, "Order of the generated graph(s)");
  gen->add_option("--order", extra.gen.size, "Order of the generated graph(s)");
  gen->add_option("--p", extra.gen.probability, "Edge probability for random graphs");
  gen->add_option("--seed", config.seed, "Seed for random graphs");
  gen->add_option("--max-order", config.max_order, "Order for 'all'");
  gen->add_option("--filter", extra.filters, "Filters for 'all'");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    config.filters = parse_filters(extra.filters);
    config.format = extra.format == "table" ? OutputFormat::kTable : OutputFormat::kJsonLines;
    if (!extra.budget_given) config.budget = default_budget();
    if (config.workers == 0) throw UsageError("--workers must be positive");
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw std::runtime_error("cannot write output file " + config.output);
      sink = &file;
    }

    int status = kExitOk;
    if (gen->parsed()) {
      config.command = "gen";
      status = cmd_gen(config, extra, *sink);
    } else {
      for (CLI::App* cmd : commands) {
        if (cmd->parsed()) config.command = cmd->get_name();
      }
      if (config.command == "product") {
        status = cmd_product(config, extra, *sink);
      } else if (config.command == "kappa") {
        status = cmd_kappa(config, *sink);
      } else if (config.command == "cuts") {
        status = cmd_cuts(config, *sink, err);
      } else if (config.command == "super-kappa") {
        status = cmd_super_kappa(config, *sink);
      } else if (config.command == "gstar") {
        status = cmd_gstar(config, extra, *sink);
      } else if (config.command == "batch" && config.input_paths.empty()) {
        throw UsageError("batch needs at least one --input file");
      } else {
        status = cmd_verify(config, *sink);
      }
    }
    sink->flush();
    if (!*sink) throw std::runtime_error("write to output failed");
    return status;
  } catch (const UsageError& e) {
    err << "kronkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    err << "kronkit: " << e.what() << '\n';
    return kExitSkipped;
  } catch (const std::exception& e) {
    err << "kronkit: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace kronkit::cli
