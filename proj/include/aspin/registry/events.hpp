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
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "aspin/registry/types.hpp"

namespace aspin {

// Registry state is a pure fold over these events. Every mutating operation
// validates, appends exactly one event, and applies it; replaying the event
// list from an empty state reproduces the state byte for byte.

struct DeployedEvent {
    RegistryConfig config;
    std::set<AccountId> genesis_admins;
};

struct SidechainAddedEvent {
    Pbi pbi;
    VotingConfig voting;
    std::set<AccountId> unmasked;
    std::set<MaskedId> masked;
};

struct PinAddedEvent {
    MapKey key;
    Pin pin;
};

struct UnmaskedEvent {
    Pbi pbi;
    MaskedId commitment;  // removed from the masked set; caller joins unmasked
};

struct ProposalOpenedEvent {
    Pbi pbi;
    std::uint64_t id = 0;
    ProposalAction action;
    std::optional<ContestProof> proof;  // present for contest proposals
};

struct VoteCastEvent {
    Pbi pbi;
    std::uint64_t id = 0;
    bool approve = false;
};

struct ProposalActionedEvent {
    Pbi pbi;
    std::uint64_t id = 0;
    bool passed = false;
};

struct HeightAdvancedEvent {
    std::uint64_t new_height = 0;
};

/// Warning: a removal left the sidechain with no unmasked participants, so
/// no further proposals can pass on it.
struct GovernanceLostEvent {
    Pbi pbi;
};

using EventBody = std::variant<DeployedEvent, SidechainAddedEvent, PinAddedEvent,
                               UnmaskedEvent, ProposalOpenedEvent, VoteCastEvent,
                               ProposalActionedEvent, HeightAdvancedEvent,
                               GovernanceLostEvent>;

struct Event {
    std::uint64_t height = 0;
    AccountId caller;  // zero account for clock/system events
    EventBody body;
};

std::string_view event_type_name(const EventBody& body);

/// JSON-lines form: {"event_type": ..., "height": ..., "caller": ...,
/// "payload": {...}} with that exact key order and lowercase fixed-width hex.
nlohmann::ordered_json event_to_json(const Event& ev);
std::string events_to_jsonl(const std::vector<Event>& events);

/// Applies one event to a state. Events are assumed valid (they were checked
/// when first emitted); apply is total and deterministic.
void apply_event(RegistryState& state, const Event& ev);

/// Folds a full event list into a fresh state.
RegistryState replay_events(const std::vector<Event>& events);

/// Canonical serialization of a registry state: fixed key order, sorted map
/// iteration, lowercase hex, integers only.
std::string serialize_state(const RegistryState& state);

}  // namespace aspin
