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

#include "aspin/crypto/derive.hpp"
#include "aspin/sim/simulation.hpp"

using namespace aspin;
using namespace aspin::sim;

namespace {

AccountId account(std::uint8_t tag) {
    AccountId a;
    a.bytes.fill(tag);
    return a;
}

// mainnet-style host plus one pinning chain, guardian and one watcher
SimConfig small_config() {
    SimConfig cfg;
    ChainConfig mainnet;
    mainnet.id = "mainnet";
    mainnet.ticks_per_block = 1;
    mainnet.block_period_s = 15;
    mainnet.mode = FinalityMode::probabilistic;
    mainnet.confirm_depth = 6;
    mainnet.registry = RegistryHostConfig{{VotingAlgorithm::strict_majority, 7}, 15, {account(0xAA)}};
    cfg.chains.push_back(mainnet);

    ChainConfig leaf;
    leaf.id = "leaf";
    leaf.ticks_per_block = 1;
    leaf.block_period_s = 15;
    leaf.mode = FinalityMode::instant;
    leaf.pin_link = PinLinkConfig{"mainnet", Pbi{Digest256::filled(0x1f)},
                                  ChainSecret{Digest256::filled(0x2f)}, 30,
                                  {VotingAlgorithm::strict_majority, 7}};
    cfg.chains.push_back(leaf);

    ActorConfig guardian;
    guardian.account = account(0x01);
    guardian.chain = "leaf";
    guardian.role = ActorRole::quiet_guardian;
    guardian.posts_for = {"leaf"};
    cfg.actors.push_back(guardian);

    ActorConfig watcher;
    watcher.account = account(0x0A);
    watcher.chain = "leaf";
    watcher.role = ActorRole::member;
    watcher.secret_access = true;
    watcher.watches = {"leaf"};
    cfg.actors.push_back(watcher);

    cfg.duration_ticks = 200;
    cfg.seed = 7;
    return cfg;
}

}  // namespace

TEST_CASE("validate rejects malformed topologies") {
    SimConfig cfg = small_config();
    CHECK(!Simulation(cfg).validate().has_value());

    SUBCASE("unknown parent") {
        cfg.chains[1].pin_link->parent = "nowhere";
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("parent without registry") {
        cfg.chains[1].pin_link->parent = "leaf";
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("reserved pbi") {
        cfg.chains[1].pin_link->pbi = Pbi::management();
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("clock inconsistency") {
        cfg.chains[1].block_period_s = 10;
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("sidechain voting period must fit under the dispute period") {
        cfg.chains[1].pin_link->voting.voting_period = 15;
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("watcher needs secret access") {
        cfg.actors[1].secret_access = false;
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("masked actor needs a salt") {
        cfg.actors[1].role = ActorRole::masked_member;
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("duplicate accounts") {
        cfg.actors[1].account = cfg.actors[0].account;
        CHECK(Simulation(cfg).validate().has_value());
    }
    SUBCASE("script must not revert a registry host") {
        cfg.script.push_back({50, ScriptKind::revert_rewrite, "mainnet", 10, {}});
        CHECK(Simulation(cfg).validate().has_value());
    }
}

TEST_CASE("happy path posts pins on schedule and finalizes them") {
    SimConfig cfg = small_config();
    RunResult result = Simulation(cfg).run();

    // dues at leaf heights 30, 60, 90, 120, 150, 180; the last may still be pending
    const auto& facts = result.pin_facts.at("leaf");
    REQUIRE(facts.size() == 6);
    for (std::size_t i = 0; i < facts.size(); ++i) {
        CHECK(facts[i].ordinal == i);
        CHECK(facts[i].prf_index == i);
        CHECK(facts[i].pinned_height == (i + 1) * 30);
        CHECK(facts[i].posted_at == (i + 1) * 30);
    }
    CHECK(facts[0].status == PinFact::Status::accepted_final);
    CHECK(result.rejected_counts.empty());
    CHECK(result.op_counts.at("mainnet").at("add_pin") == 6);
    CHECK(result.op_counts.at("mainnet").count("propose_vote/contest_pin") == 0);

    // no governance traffic on a clean run
    for (const auto& ev : result.log) CHECK(ev.type != "watcher_mismatch");
}

TEST_CASE("identical configs produce byte-identical logs and states") {
    SimConfig cfg = small_config();
    RunResult a = Simulation(cfg).run();
    RunResult b = Simulation(cfg).run();
    CHECK(a.log_jsonl == b.log_jsonl);
    CHECK(a.registry_states == b.registry_states);

    // a different seed changes the chains and therefore the log
    cfg.seed = 8;
    RunResult c = Simulation(cfg).run();
    CHECK(a.log_jsonl != c.log_jsonl);
}

TEST_CASE("empty script on a chain without actors logs only mints and clock ticks") {
    SimConfig cfg;
    ChainConfig solo;
    solo.id = "solo";
    solo.ticks_per_block = 1;
    solo.block_period_s = 2;
    solo.mode = FinalityMode::instant;
    solo.registry = RegistryHostConfig{{VotingAlgorithm::strict_majority, 2}, 4, {account(0xAA)}};
    cfg.chains.push_back(solo);
    cfg.duration_ticks = 10;
    cfg.seed = 1;
    REQUIRE(!Simulation(cfg).validate().has_value());
    RunResult result = Simulation(cfg).run();
    std::set<std::string> types;
    for (const auto& ev : result.log) types.insert(ev.type);
    CHECK(types ==
          std::set<std::string>{"block_minted", "deployed", "height_advanced"});
}

TEST_CASE("one guardian account interleaves pins for two chains") {
    SimConfig cfg;
    ChainConfig hub;
    hub.id = "hub";
    hub.ticks_per_block = 1;
    hub.block_period_s = 2;
    hub.mode = FinalityMode::instant;
    hub.registry = RegistryHostConfig{{VotingAlgorithm::strict_majority, 2}, 4, {account(0xAA)}};
    cfg.chains.push_back(hub);

    auto make_leaf = [&](const char* id, std::uint8_t tag, std::uint64_t period) {
        ChainConfig c;
        c.id = id;
        c.ticks_per_block = 1;
        c.block_period_s = 2;
        c.mode = FinalityMode::instant;
        c.pin_link = PinLinkConfig{"hub", Pbi{Digest256::filled(tag)},
                                   ChainSecret{Digest256::filled(tag + 0x10)}, period,
                                   {VotingAlgorithm::strict_majority, 2}};
        cfg.chains.push_back(c);
    };
    make_leaf("ay", 0x31, 6);
    make_leaf("bee", 0x32, 9);

    ActorConfig guardian;
    guardian.account = account(0x01);
    guardian.chain = "ay";
    guardian.role = ActorRole::quiet_guardian;
    guardian.posts_for = {"ay", "bee"};
    cfg.actors.push_back(guardian);
    cfg.duration_ticks = 400;
    cfg.seed = 3;
    REQUIRE(!Simulation(cfg).validate().has_value());
    RunResult result = Simulation(cfg).run();

    const auto& ay = result.pin_facts.at("ay");
    const auto& bee = result.pin_facts.at("bee");
    CHECK(ay.size() >= 50);
    CHECK(bee.size() >= 35);

    // each chain's key sequence re-derives from its own secret and no keys collide
    std::set<MapKey> ay_keys, bee_keys;
    Pin prev = genesis_pin();
    for (const auto& f : ay) {
        CHECK(f.key == derive_map_key(Pbi{Digest256::filled(0x31)}, prev,
                                      prf_value(ChainSecret{Digest256::filled(0x41)}, f.prf_index)));
        prev = f.pin;
        ay_keys.insert(f.key);
    }
    prev = genesis_pin();
    for (const auto& f : bee) {
        CHECK(f.key == derive_map_key(Pbi{Digest256::filled(0x32)}, prev,
                                      prf_value(ChainSecret{Digest256::filled(0x42)}, f.prf_index)));
        prev = f.pin;
        bee_keys.insert(f.key);
    }
    for (const auto& k : ay_keys) CHECK(bee_keys.count(k) == 0);
}

TEST_CASE("revert then restore with identical roots keeps hashes aligned") {
    SimConfig cfg = small_config();
    cfg.script.push_back({40, ScriptKind::revert_rewrite, "leaf", 35, {}});
    cfg.script.push_back({50, ScriptKind::restore, "leaf", 0, {}});
    REQUIRE(!Simulation(cfg).validate().has_value());
    RunResult result = Simulation(cfg).run();
    std::uint64_t reverted = 0, restored = 0;
    for (const auto& ev : result.log) {
        if (ev.type == "chain_reverted") reverted++;
        if (ev.type == "chain_restored") restored++;
    }
    CHECK(reverted == 1);
    CHECK(restored == 1);
}
