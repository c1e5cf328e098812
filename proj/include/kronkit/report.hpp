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

#ifndef KRONKIT_REPORT_HPP_
#define KRONKIT_REPORT_HPP_

// JSON-lines and table rendering of cut lists, verification reports and
// lemma checks. JSON output is byte-stable: fields are emitted in a fixed
// order and contain nothing run-dependent unless timing is requested.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kronkit/analysis.hpp"
#include "kronkit/connectivity.hpp"

namespace kronkit {

using Json = nlohmann::ordered_json;

const char* to_string(ReportStatus status);
const char* to_string(Severity severity);

// {"cut":[...],"isolates":bool,"neighborhood_of":id|null}
Json cut_to_json(const CutSet& cut);

Json report_to_json(const VerificationReport& report);

// {"instances":N,"holds":N,"violations":N,"skips":N}
Json summary_to_json(const BatchSummary& summary);

Json lemma_check_to_json(const LemmaCheck& check, bool include_trials);

Json gstar_to_json(const ResidueSystem& rs, const GStarGraph& gstar);

void write_report_table(std::ostream& out, const std::vector<VerificationReport>& reports);

}  // namespace kronkit

#endif  // KRONKIT_REPORT_HPP_
