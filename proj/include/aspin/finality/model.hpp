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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace aspin::finality {

/// One pinning layer of the hierarchy, expressed in the management chain's
/// blocks. observe_depth is 6 for the usual probabilistic-finality public
/// chain and 1 where the management chain has instant finality.
struct LayerParams {
    std::string name;  // label for reports; empty is fine
    std::uint64_t observe_depth = 6;
    std::uint64_t unmask_blocks = 1;
    std::uint64_t voting_period = 7;
    std::uint64_t action_blocks = 1;
    std::uint64_t block_period_s = 15;
    std::uint64_t pinning_period = 0;  // blocks between pins posted to this layer
};

inline LayerParams mainnet_defaults() { return LayerParams{"mainnet", 6, 1, 7, 1, 15, 0}; }
inline LayerParams ibft_defaults() { return LayerParams{"ibft", 1, 1, 2, 1, 2, 0}; }

/// Validated minimum: voters must be able to see an open proposal and still
/// cast a vote, so voting_period >= observe_depth + 1. All-zero layers pass
/// (degenerate but well-defined).
bool layer_valid(const LayerParams& layer, std::string* why = nullptr);

/// Worst-case blocks from pin posting to contest disposal:
/// observe + unmask + voting + action.
std::uint64_t contest_period_blocks(const LayerParams& layer);

std::uint64_t contest_period_seconds(const LayerParams& layer);

struct LayerFigures {
    std::string name;
    std::uint64_t contest_blocks = 0;
    std::uint64_t contest_seconds = 0;
    std::uint64_t pinning_seconds = 0;
    std::uint64_t worst_case_seconds = 0;  // contest + pinning
};

struct FinalityReport {
    std::vector<LayerFigures> layers;
    std::uint64_t best_case_seconds = 0;   // sum of contest periods only
    std::uint64_t worst_case_seconds = 0;  // sum of (contest + pinning)
};

/// Sums per-layer worst cases; empty input yields no report.
std::optional<FinalityReport> hierarchy_finality(std::span<const LayerParams> layers);

std::string report_text(const FinalityReport& report);
nlohmann::ordered_json report_json(const FinalityReport& report);

}  // namespace aspin::finality
