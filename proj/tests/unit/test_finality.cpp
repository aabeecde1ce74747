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

#include <random>

#include "aspin/finality/model.hpp"

using namespace aspin::finality;

TEST_CASE("contest period arithmetic") {
    CHECK(contest_period_blocks(LayerParams{"", 6, 1, 7, 1, 15, 0}) == 15);
    CHECK(contest_period_blocks(LayerParams{"", 1, 1, 2, 1, 2, 0}) == 5);
    CHECK(contest_period_blocks(LayerParams{"", 0, 0, 0, 0, 1, 0}) == 0);

    CHECK(contest_period_seconds(LayerParams{"", 6, 1, 7, 1, 15, 0}) == 225);
    CHECK(contest_period_seconds(LayerParams{"", 1, 1, 2, 1, 2, 0}) == 10);
    CHECK(contest_period_seconds(LayerParams{"", 0, 0, 0, 0, 5, 0}) == 0);
}

TEST_CASE("presets match the reference figures") {
    CHECK(contest_period_blocks(mainnet_defaults()) == 15);
    CHECK(contest_period_seconds(mainnet_defaults()) == 225);
    CHECK(contest_period_blocks(ibft_defaults()) == 5);
}

TEST_CASE("hourly pinning worst case") {
    LayerParams layer = mainnet_defaults();
    layer.pinning_period = 240;  // one hour of 15 s blocks
    auto report = hierarchy_finality(std::span(&layer, 1));
    REQUIRE(report.has_value());
    CHECK(report->worst_case_seconds == 3825);
    CHECK(report->best_case_seconds == 225);
}

TEST_CASE("pinning period of zero leaves the contest period only") {
    LayerParams layer = mainnet_defaults();
    auto report = hierarchy_finality(std::span(&layer, 1));
    REQUIRE(report.has_value());
    CHECK(report->worst_case_seconds == 225);
}

TEST_CASE("hierarchies sum per-layer figures") {
    std::vector<LayerParams> layers = {
        {"leaf->mid", 1, 1, 2, 1, 2, 30},     // contest 5 blocks * 2 s + 60 s pinning
        {"mid->root", 6, 1, 7, 1, 15, 240},   // contest 225 s + 3600 s pinning
    };
    auto report = hierarchy_finality(layers);
    REQUIRE(report.has_value());
    CHECK(report->layers.size() == 2);
    CHECK(report->layers[0].worst_case_seconds == 5 * 2 + 30 * 2);
    CHECK(report->layers[1].worst_case_seconds == 225 + 3600);
    CHECK(report->worst_case_seconds == 70 + 3825);
    CHECK(report->best_case_seconds == 10 + 225);
}

TEST_CASE("empty hierarchy yields no report") {
    CHECK(!hierarchy_finality({}).has_value());
}

TEST_CASE("monotonicity: growing any field never shrinks the total") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        LayerParams a;
        a.observe_depth = rng() % 10;
        a.unmask_blocks = rng() % 4;
        a.voting_period = rng() % 20;
        a.action_blocks = rng() % 4;
        a.block_period_s = 1 + rng() % 30;
        a.pinning_period = rng() % 500;

        LayerParams b = a;
        switch (rng() % 6) {
            case 0: b.observe_depth += 1 + rng() % 5; break;
            case 1: b.unmask_blocks += 1 + rng() % 5; break;
            case 2: b.voting_period += 1 + rng() % 5; break;
            case 3: b.action_blocks += 1 + rng() % 5; break;
            case 4: b.block_period_s += 1 + rng() % 5; break;
            case 5: b.pinning_period += 1 + rng() % 5; break;
        }
        auto ra = hierarchy_finality(std::span(&a, 1));
        auto rb = hierarchy_finality(std::span(&b, 1));
        REQUIRE(ra.has_value());
        REQUIRE(rb.has_value());
        CHECK(rb->worst_case_seconds >= ra->worst_case_seconds);
    }
}

TEST_CASE("voting-period minimum is validated, not hardcoded") {
    std::string why;
    LayerParams mainnet = mainnet_defaults();
    CHECK(layer_valid(mainnet, &why));
    mainnet.voting_period = 6;  // too short to see the proposal and vote
    CHECK(!layer_valid(mainnet, &why));
    CHECK(!why.empty());

    LayerParams ibft = ibft_defaults();
    CHECK(layer_valid(ibft, &why));
    ibft.voting_period = 1;
    CHECK(!layer_valid(ibft, &why));

    LayerParams degenerate{"", 0, 0, 0, 0, 1, 0};
    CHECK(layer_valid(degenerate, &why));
}
