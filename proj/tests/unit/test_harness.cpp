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

#include <doctest.h>

#include <set>
#include <string>

#include "aspin/harness/scenario.hpp"
#include "aspin/harness/verify_log.hpp"

using namespace aspin;
using namespace aspin::harness;

namespace {

const char* kScenarios[] = {
    "01_happy_hourly.json",        "02_collusion_contest.json", "03_masked_unmask_vote.json",
    "04_rate_hiding_two_chains.json", "05_hierarchy_three_layers.json", "06_key_squatting.json",
    "07_vote_suppression.json",
};

std::string scenario_path(const char* name) {
    return std::string(ASPIN_SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("every bundled scenario passes its expectations") {
    for (const char* name : kScenarios) {
        CAPTURE(name);
        Scenario sc = load_scenario_file(scenario_path(name));
        sim::Simulation simulation(sc.sim);
        sim::RunResult result = simulation.run();
        RunReport report = evaluate(sc, result);
        for (const auto& r : report.expectations) {
            CAPTURE(r.description);
            CAPTURE(r.detail);
            CHECK(r.passed);
        }
        CHECK(report.all_passed);
        CHECK(result.warnings.empty());
    }
}

TEST_CASE("scenario loader rejects malformed input") {
    CHECK_THROWS_AS(load_scenario_text("{not json"), ScenarioError);
    CHECK_THROWS_AS(load_scenario_text("{\"name\": \"x\"}"), ScenarioError);
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/path.json"), ScenarioError);

    // structurally valid JSON, broken topology
    CHECK_THROWS_AS(load_scenario_text(R"({
        "name": "bad", "duration_ticks": 10,
        "chains": [
          {"id": "a", "finality": {"mode": "instant"},
           "pins_to": {"parent": "missing", "pbi": "0x1111111111111111111111111111111111111111111111111111111111111111",
                       "secret": "0x2222222222222222222222222222222222222222222222222222222222222222",
                       "pinning_period": 5, "voting_period": 2}}
        ]})"),
                    ScenarioError);
}

TEST_CASE("verify-log partitions a shared registry exactly by secret") {
    Scenario sc = load_scenario_file(scenario_path("04_rate_hiding_two_chains.json"));
    sim::Simulation simulation(sc.sim);
    sim::RunResult result = simulation.run();

    const auto& alpha_link = *sc.sim.chains[1].pin_link;
    const auto& beta_link = *sc.sim.chains[2].pin_link;

    LogPartition alpha = verify_log_text(result.log_jsonl, alpha_link.secret, alpha_link.pbi);
    LogPartition beta = verify_log_text(result.log_jsonl, beta_link.secret, beta_link.pbi);

    std::set<MapKey> alpha_truth, beta_truth;
    for (const auto& f : result.pin_facts.at("alpha")) alpha_truth.insert(f.key);
    for (const auto& f : result.pin_facts.at("beta")) beta_truth.insert(f.key);

    std::set<MapKey> alpha_found, beta_found;
    for (const auto& p : alpha.pins) alpha_found.insert(p.key);
    for (const auto& p : beta.pins) beta_found.insert(p.key);

    CHECK(alpha_found == alpha_truth);
    CHECK(beta_found == beta_truth);
    CHECK(!alpha.reconstruction_broke);

    // no overlap between the two recovered partitions
    for (const auto& k : alpha_found) CHECK(beta_found.count(k) == 0);

    // a wrong secret recovers nothing and is reported as a break
    LogPartition wrong =
        verify_log_text(result.log_jsonl, ChainSecret{Digest256::filled(0xDD)}, alpha_link.pbi);
    CHECK(wrong.pins.empty());
    CHECK(wrong.reconstruction_broke);

    // an empty log yields an empty partition without an error
    LogPartition empty = verify_log_text("", alpha_link.secret, alpha_link.pbi);
    CHECK(empty.pins.empty());
    CHECK(!empty.reconstruction_broke);
}

TEST_CASE("verify-log reports contested slots from the log alone") {
    Scenario sc = load_scenario_file(scenario_path("02_collusion_contest.json"));
    sim::Simulation simulation(sc.sim);
    sim::RunResult result = simulation.run();
    const auto& link = *sc.sim.chains[1].pin_link;
    LogPartition part = verify_log_text(result.log_jsonl, link.secret, link.pbi);
    CHECK(part.contested == 1);
    CHECK(part.accepted == 6);
    REQUIRE(!part.pins.empty());
    CHECK(part.pins[0].contested);
    CHECK(part.pins[0].prf_index == 0);
    CHECK(part.pins[1].prf_index == 1);
    CHECK(part.pins[1].ordinal == 0);  // replacement fills the same slot
}

TEST_CASE("bundled scenarios replay deterministically") {
    for (const char* name : {"02_collusion_contest.json", "05_hierarchy_three_layers.json"}) {
        CAPTURE(name);
        Scenario sc = load_scenario_file(scenario_path(name));
        sim::RunResult a = sim::Simulation(sc.sim).run();
        sim::RunResult b = sim::Simulation(sc.sim).run();
        CHECK(a.log_jsonl == b.log_jsonl);
        CHECK(a.registry_states == b.registry_states);
    }
}

TEST_CASE("layer stacks derive from the topology") {
    Scenario sc = load_scenario_file(scenario_path("05_hierarchy_three_layers.json"));
    auto layers = layer_stack(sc.sim, "leaf");
    REQUIRE(layers.size() == 2);
    CHECK(layers[0].observe_depth == 1);  // instant mid chain
    CHECK(layers[0].voting_period == 2);
    CHECK(layers[0].block_period_s == 5);
    CHECK(layers[0].pinning_period == 11);
    CHECK(layers[1].observe_depth == 6);  // probabilistic mainnet
    CHECK(layers[1].voting_period == 7);
    CHECK(layers[1].block_period_s == 15);
    CHECK(layers[1].pinning_period == 16);  // 48 five-second blocks = 16 mainnet blocks

    auto report = finality::hierarchy_finality(layers);
    REQUIRE(report.has_value());
    CHECK(report->worst_case_seconds == (5 * 5 + 11 * 5) + (225 + 240));
}

TEST_CASE("run report renders and serializes") {
    Scenario sc = load_scenario_file(scenario_path("01_happy_hourly.json"));
    sim::RunResult result = sim::Simulation(sc.sim).run();
    RunReport report = evaluate(sc, result);
    std::string text = report_text(report);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
    auto j = report_json(report);
    CHECK(j.at("all_passed").get<bool>());
    CHECK(j.at("op_counts").contains("mainnet"));
}
