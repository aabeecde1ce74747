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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aspin/crypto/digest.hpp"
#include "aspin/registry/registry.hpp"
#include "aspin/sim/chain.hpp"

namespace aspin::sim {

struct RegistryHostConfig {
    VotingConfig mgmt_voting;
    std::uint64_t pin_dispute_period = 0;
    std::vector<AccountId> genesis_admins;
};

/// A chain that pins to a parent management chain.
struct PinLinkConfig {
    std::string parent;  // chain id hosting the registry
    Pbi pbi;
    ChainSecret secret;
    std::uint64_t pinning_period = 1;  // pinned-chain blocks between pins
    VotingConfig voting;               // this sidechain's governance config
};

struct ChainConfig {
    std::string id;
    std::uint64_t ticks_per_block = 1;
    std::uint64_t block_period_s = 15;
    FinalityMode mode = FinalityMode::instant;
    std::uint64_t confirm_depth = 0;
    std::optional<RegistryHostConfig> registry;
    std::optional<PinLinkConfig> pin_link;
};

enum class ActorRole { member, masked_member, quiet_guardian };

struct ActorConfig {
    AccountId account;
    std::string chain;  // home chain (membership anchor)
    ActorRole role = ActorRole::member;
    bool secret_access = false;      // can read payloads and derive expectations
    std::optional<Digest256> salt;   // masked members only
    std::vector<std::string> posts_for;  // chains this actor posts pins for
    std::vector<std::string> watches;    // chains whose pin stream this actor polices
    bool oppose_contests = false;        // votes no on every contest proposal
};

enum class ScriptKind { revert_rewrite, restore, false_pin, squat_next_key };

struct ScriptEvent {
    std::uint64_t tick = 0;
    ScriptKind kind = ScriptKind::false_pin;
    std::string chain;
    std::uint64_t to_height = 0;  // revert_rewrite only
    AccountId poster;             // false_pin / squat_next_key
};

struct SimConfig {
    std::vector<ChainConfig> chains;
    std::vector<ActorConfig> actors;
    std::vector<ScriptEvent> script;
    std::uint64_t duration_ticks = 0;
    std::uint64_t seed = 0;
};

/// Ground-truth record of one protocol-keyed pin slot, kept by the simulator
/// for verification against log-reconstruction and the finality model.
struct PinFact {
    std::string chain;
    Pbi pbi;
    std::uint64_t ordinal = 0;    // which due pin this is (0-based)
    std::uint64_t prf_index = 0;  // PRF counter consumed by this key
    MapKey key;
    Pin pin;
    std::uint64_t pinned_height = 0;  // pinned-chain block height the value refers to
    std::uint64_t posted_at = 0;      // management-chain height of the add_pin
    std::uint64_t posted_tick = 0;
    AccountId poster;
    enum class Status { pending, accepted_final, contested } status = Status::pending;
};

struct SimEvent {
    std::string type;
    std::uint64_t height = 0;
    AccountId caller;
    nlohmann::ordered_json payload;
};

struct RunResult {
    std::vector<SimEvent> log;
    std::string log_jsonl;  // canonical one-line-per-event bytes
    std::map<std::string, std::vector<PinFact>> pin_facts;        // by pinning chain id
    std::map<std::string, std::string> registry_states;           // by host chain id
    std::map<std::string, std::map<std::string, std::uint64_t>> op_counts;  // host -> op row
    std::map<std::string, std::uint64_t> rejected_counts;         // error name -> count
    std::map<std::string, std::uint64_t> worst_final_age_ticks;   // pinning chain -> worst age
    std::uint64_t seconds_per_tick = 0;
    std::vector<std::string> warnings;
};

/// Deterministic total-order execution of one scenario. Logically
/// single-threaded; independent runs may execute concurrently.
class Simulation {
  public:
    explicit Simulation(SimConfig config) : config_(std::move(config)) {}

    /// Structural validation (reference resolution, clock consistency).
    /// Returns an explanation for the first problem found.
    std::optional<std::string> validate() const;

    RunResult run();

  private:
    SimConfig config_;
};

std::string events_to_jsonl(const std::vector<SimEvent>& events);

}  // namespace aspin::sim
