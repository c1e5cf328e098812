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

#include "kronkit/report.hpp"

#include <iomanip>

#include "kronkit/graph6.hpp"

namespace kronkit {
namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::string optional_text(const std::optional<T>& value) {
  if (!value) return "-";
  if constexpr (std::is_same_v<T, bool>) {
    return *value ? "yes" : "no";
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

const char* to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::kOk:
      return "ok";
    case ReportStatus::kSkipped:
      return "skipped";
    case ReportStatus::kError:
      return "error";
  }
  return "error";
}

const char* to_string(Severity severity) {
  return severity == Severity::kContradictsPaper ? "contradicts-paper" : "none";
}

Json cut_to_json(const CutSet& cut) {
  Json j;
  j["cut"] = cut.vertices;
  j["isolates"] = cut.isolates;
  j["neighborhood_of"] = optional_json(cut.witness);
  return j;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["instance"] = Json{{"graph6", report.graph6}, {"n", report.n}, {"source", report.source}};
  j["kappa_G"] = optional_json(report.kappa_G);
  j["delta_G"] = optional_json(report.delta_G);
  j["product_kappa"] = optional_json(report.product_kappa);
  j["formula_rhs"] = optional_json(report.formula_rhs);
  j["theorem11_holds"] = optional_json(report.theorem11_holds);
  j["super_kappa_verdict"] = optional_json(report.super_kappa_verdict);
  j["min_cut_count"] = optional_json(report.min_cut_count);
  if (report.non_isolating_cut) {
    Json cut = cut_to_json(*report.non_isolating_cut);
    cut["contained_fiber"] = optional_json(report.non_isolating_cut->contained_fiber);
    j["non_isolating_cut"] = std::move(cut);
  } else {
    j["non_isolating_cut"] = nullptr;
  }
  j["runtime_ms"] = report.runtime_ms;
  j["fiber_containing_cuts"] = optional_json(report.fiber_containing_cuts);
  j["vacuous"] = report.vacuous;
  j["status"] = to_string(report.status);
  j["severity"] = to_string(report.severity);
  j["message"] = report.message;
  return j;
}

Json summary_to_json(const BatchSummary& summary) {
  Json j;
  j["instances"] = summary.instances;
  j["holds"] = summary.holds;
  j["violations"] = summary.violations;
  j["skips"] = summary.skips;
  return j;
}

Json lemma_check_to_json(const LemmaCheck& check, bool include_trials) {
  Json j;
  j["instance"] = Json{{"graph6", check.graph6}, {"n", check.n}};
  j["seed"] = check.seed;
  j["trials"] = check.trials.size();
  j["gstar_connected"] = check.trials.size() - check.gstar_violations();
  j["residue_check_applies"] = check.residue_check_applies;
  j["residues_unsplit"] =
      check.residue_check_applies ? Json(check.trials.size() - check.residue_violations()) : Json(nullptr);
  j["rejected_residue_empty"] = check.rejected_residue_empty;
  j["rejected_isolated"] = check.rejected_isolated;
  j["exhausted"] = check.exhausted;
  const bool violated = check.gstar_violations() > 0 || check.residue_violations() > 0;
  j["severity"] = violated ? "contradicts-paper" : "none";
  j["message"] = check.message;
  Json failures = Json::array();
  for (const LemmaTrial& t : check.trials) {
    const bool failed = !t.gstar_connected || (t.residues_unsplit && !*t.residues_unsplit);
    if (!failed && !include_trials) continue;
    Json tj;
    tj["removed"] = t.removed;
    tj["gstar_connected"] = t.gstar_connected;
    tj["singleton_classes"] = t.singleton_classes;
    tj["residues_unsplit"] = optional_json(t.residues_unsplit);
    tj["split_fiber"] = optional_json(t.split_fiber);
    failures.push_back(std::move(tj));
  }
  j[include_trials ? "samples" : "violating_samples"] = std::move(failures);
  return j;
}

Json gstar_to_json(const ResidueSystem& rs, const GStarGraph& gstar) {
  Json j;
  j["removed"] = rs.removed.to_vector();
  j["conditions"] = Json{{"size_ok", rs.conditions.size_ok},
                         {"residues_nonempty", rs.conditions.residues_nonempty},
                         {"no_isolated", rs.conditions.no_isolated}};
  Json residues = Json::array();
  for (const VertexSet& r : rs.residues) residues.push_back(r.to_vector());
  j["residues"] = std::move(residues);
  j["gstar_graph6"] = encode_graph6(gstar.graph);
  Json edges = Json::array();
  for (const auto& [edge, witness] : gstar.edge_witnesses) {
    edges.push_back(Json{{"edge", {edge.u, edge.v}}, {"witness", {witness.u, witness.v}}});
  }
  j["edges"] = std::move(edges);
  j["singleton_classes"] = gstar.singleton_classes;
  j["connected"] = is_connected(gstar.graph);
  return j;
}

void write_report_table(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << std::left << std::setw(14) << "graph6" << std::setw(4) << "n" << std::setw(6) << "kG"
      << std::setw(6) << "dG" << std::setw(8) << "k(GxK)" << std::setw(8) << "min{}" << std::setw(6)
      << "thm" << std::setw(7) << "super" << std::setw(10) << "mincuts" << std::setw(9) << "status"
      << "severity\n";
  for (const VerificationReport& r : reports) {
    out << std::left << std::setw(14) << r.graph6 << std::setw(4) << r.n << std::setw(6)
        << optional_text(r.kappa_G) << std::setw(6) << optional_text(r.delta_G) << std::setw(8)
        << optional_text(r.product_kappa) << std::setw(8) << optional_text(r.formula_rhs)
        << std::setw(6) << optional_text(r.theorem11_holds) << std::setw(7)
        << optional_text(r.super_kappa_verdict) << std::setw(10) << optional_text(r.min_cut_count)
        << std::setw(9) << to_string(r.status) << to_string(r.severity) << '\n';
    if (!r.message.empty()) out << "  " << r.message << '\n';
  }
}

}  // namespace kronkit
