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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "aspin/harness/scenario.hpp"
#include "aspin/harness/verify_log.hpp"

namespace {

int run_command(const std::string& scenario_path, const std::string& out_path,
                const std::string& report_path, std::optional<std::uint64_t> seed_override,
                const std::string& format) {
    aspin::harness::Scenario scenario;
    try {
        scenario = aspin::harness::load_scenario_file(scenario_path);
    } catch (const std::exception& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 2;
    }
    if (seed_override) scenario.sim.seed = *seed_override;

    aspin::sim::Simulation simulation(scenario.sim);
    aspin::sim::RunResult result = simulation.run();
    aspin::harness::RunReport report = aspin::harness::evaluate(scenario, result);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write event log: " << out_path << "\n";
            return 2;
        }
        out << result.log_jsonl;
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report: " << report_path << "\n";
            return 2;
        }
        out << aspin::harness::report_json(report).dump(2) << "\n";
    }
    if (format == "json")
        std::cout << aspin::harness::report_json(report).dump(2) << "\n";
    else
        std::cout << aspin::harness::report_text(report);
    return report.all_passed ? 0 : 1;
}

int finality_command(const std::string& scenario_path, const std::string& chain,
                     const std::string& preset, std::uint64_t pinning_period,
                     const std::string& format) {
    std::vector<aspin::finality::LayerParams> layers;
    if (!scenario_path.empty()) {
        aspin::harness::Scenario scenario;
        try {
            scenario = aspin::harness::load_scenario_file(scenario_path);
        } catch (const std::exception& e) {
            std::cerr << "scenario error: " << e.what() << "\n";
            return 2;
        }
        std::string leaf = chain;
        if (leaf.empty()) {
            for (const auto& c : scenario.sim.chains)
                if (c.pin_link) {
                    leaf = c.id;
                    break;
                }
        }
        layers = aspin::harness::layer_stack(scenario.sim, leaf);
    } else if (preset == "mainnet") {
        auto layer = aspin::finality::mainnet_defaults();
        layer.pinning_period = pinning_period;
        layers.push_back(layer);
    } else if (preset == "ibft") {
        auto layer = aspin::finality::ibft_defaults();
        layer.pinning_period = pinning_period;
        layers.push_back(layer);
    } else if (!preset.empty()) {
        std::cerr << "unknown preset: " << preset << "\n";
        return 2;
    }

    for (const auto& layer : layers) {
        std::string why;
        if (!aspin::finality::layer_valid(layer, &why)) {
            std::cerr << "invalid layer" << (layer.name.empty() ? "" : " " + layer.name) << ": "
                      << why << "\n";
            return 2;
        }
    }
    auto report = aspin::finality::hierarchy_finality(layers);
    if (!report) {
        std::cerr << "empty hierarchy: nothing to compute\n";
        return 2;
    }
    if (format == "json")
        std::cout << aspin::finality::report_json(*report).dump(2) << "\n";
    else
        std::cout << aspin::finality::report_text(*report);
    return 0;
}

int verify_log_command(const std::string& log_path, const std::string& secret_hex,
                       const std::string& pbi_hex, const std::string& format) {
    auto secret = aspin::digest_from_hex(secret_hex);
    auto pbi = aspin::digest_from_hex(pbi_hex);
    if (!secret || !pbi) {
        std::cerr << "secret and pbi must be 32-byte hex values\n";
        return 2;
    }
    aspin::harness::LogPartition partition;
    try {
        partition = aspin::harness::verify_log_file(log_path, aspin::ChainSecret{*secret},
                                                    aspin::Pbi{*pbi});
    } catch (const std::exception& e) {
        std::cerr << "log error: " << e.what() << "\n";
        return 2;
    }
    if (format == "json")
        std::cout << aspin::harness::partition_json(partition).dump(2) << "\n";
    else
        std::cout << aspin::harness::partition_text(partition);
    return partition.reconstruction_broke ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anonymous state pinning: scenario runner, finality calculator, log verifier"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, report_path, format = "text";
    std::optional<std::uint64_t> seed_override;
    auto* run = app.add_subcommand("run", "run a scenario and check its expectations");
    run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--out", out_path, "write the JSON-lines event log here");
    run->add_option("--report", report_path, "write the JSON run report here");
    run->add_option("--seed", seed_override, "override the scenario seed");
    run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string fin_scenario, fin_chain, fin_preset, fin_format = "text";
    std::uint64_t fin_pinning = 0;
    auto* fin = app.add_subcommand("finality", "worst-case finality for a pinning hierarchy");
    fin->add_option("--scenario", fin_scenario, "derive layers from a scenario file");
    fin->add_option("--chain", fin_chain, "leaf chain id (with --scenario)");
    fin->add_option("--preset", fin_preset, "mainnet or ibft single-layer defaults");
    fin->add_option("--pinning-period", fin_pinning, "pinning period in management blocks");
    fin->add_option("--format", fin_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string log_path, secret_hex, pbi_hex, vl_format = "text";
    auto* vl = app.add_subcommand("verify-log", "partition a log with a chain secret");
    vl->add_option("--log", log_path, "JSON-lines event log")->required();
    vl->add_option("--secret", secret_hex, "chain secret (32-byte hex)")->required();
    vl->add_option("--pbi", pbi_hex, "private blockchain identifier (32-byte hex)")->required();
    vl->add_option("--format", vl_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_command(scenario_path, out_path, report_path, seed_override, format);
    if (fin->parsed()) return finality_command(fin_scenario, fin_chain, fin_preset, fin_pinning, fin_format);
    if (vl->parsed()) return verify_log_command(log_path, secret_hex, pbi_hex, vl_format);
    return 2;
}
