// Copyright 2026 The Aspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aspin/finality/model.hpp"
#include "aspin/sim/simulation.hpp"

namespace aspin::harness {

/// Scenario file problems (malformed JSON, bad references, schema holes).
/// The CLI maps these to exit code 2.
class ScenarioError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Expectation {
    std::string check;
    nlohmann::json params;
};

struct Scenario {
    std::string name;
    sim::SimConfig sim;
    std::vector<Expectation> expectations;
};

Scenario load_scenario_text(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

struct ExpectationResult {
    std::string description;
    bool passed = false;
    std::string detail;
};

struct RunReport {
    std::string scenario_name;
    std::vector<ExpectationResult> expectations;
    bool all_passed = true;
    std::map<std::string, std::uint64_t> event_counts;  // by event type
    std::map<std::string, std::map<std::string, std::uint64_t>> op_counts;
    std::map<std::string, std::uint64_t> rejected_counts;
    // worst observed leaf-block age at full finality, in seconds, per chain
    std::map<std::string, std::uint64_t> sim_finality_seconds;
    // closed-form worst case per pinning chain, for comparison
    std::map<std::string, std::uint64_t> model_finality_seconds;
};

RunReport evaluate(const Scenario& scenario, const sim::RunResult& result);

std::string report_text(const RunReport& report);
nlohmann::ordered_json report_json(const RunReport& report);

/// Layer stack for one pinning chain, leaf upward, in each management
/// chain's blocks; used by the finality subcommand and the report.
std::vector<finality::LayerParams> layer_stack(const sim::SimConfig& config,
                                               const std::string& leaf_chain);

}  // namespace aspin::harness
