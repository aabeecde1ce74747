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

#include "aspin/finality/model.hpp"

#include <sstream>

namespace aspin::finality {

bool layer_valid(const LayerParams& layer, std::string* why) {
    // With a nonzero observation lag a voter needs observe_depth blocks to
    // see the open proposal plus one block to vote inside the window.
    if (layer.observe_depth >= 1 && layer.voting_period < layer.observe_depth + 1) {
        if (why != nullptr)
            *why = "voting_period must be at least observe_depth + 1 so a voter can see "
                   "the open proposal and still vote";
        return false;
    }
    return true;
}

std::uint64_t contest_period_blocks(const LayerParams& layer) {
    return layer.observe_depth + layer.unmask_blocks + layer.voting_period + layer.action_blocks;
}

std::uint64_t contest_period_seconds(const LayerParams& layer) {
    return contest_period_blocks(layer) * layer.block_period_s;
}

std::optional<FinalityReport> hierarchy_finality(std::span<const LayerParams> layers) {
    if (layers.empty()) return std::nullopt;
    FinalityReport report;
    for (const auto& layer : layers) {
        LayerFigures fig;
        fig.name = layer.name;
        fig.contest_blocks = contest_period_blocks(layer);
        fig.contest_seconds = fig.contest_blocks * layer.block_period_s;
        fig.pinning_seconds = layer.pinning_period * layer.block_period_s;
        fig.worst_case_seconds = fig.contest_seconds + fig.pinning_seconds;
        report.best_case_seconds += fig.contest_seconds;
        report.worst_case_seconds += fig.worst_case_seconds;
        report.layers.push_back(std::move(fig));
    }
    return report;
}

std::string report_text(const FinalityReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.layers.size(); ++i) {
        const auto& fig = report.layers[i];
        out << "layer " << i << (fig.name.empty() ? "" : " (" + fig.name + ")")
            << ": contest period " << fig.contest_blocks << " blocks / " << fig.contest_seconds
            << " s";
        if (fig.pinning_seconds > 0) out << ", pinning period " << fig.pinning_seconds << " s";
        out << ", worst case " << fig.worst_case_seconds << " s\n";
    }
    out << "best case finality: " << report.best_case_seconds << " s\n";
    out << "worst case finality: " << report.worst_case_seconds << " s\n";
    return out.str();
}

nlohmann::ordered_json report_json(const FinalityReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json layers = nlohmann::ordered_json::array();
    for (const auto& fig : report.layers) {
        nlohmann::ordered_json l;
        l["name"] = fig.name;
        l["contest_blocks"] = fig.contest_blocks;
        l["contest_seconds"] = fig.contest_seconds;
        l["pinning_seconds"] = fig.pinning_seconds;
        l["worst_case_seconds"] = fig.worst_case_seconds;
        layers.push_back(l);
    }
    j["layers"] = layers;
    j["best_case_seconds"] = report.best_case_seconds;
    j["worst_case_seconds"] = report.worst_case_seconds;
    return j;
}

}  // namespace aspin::finality
