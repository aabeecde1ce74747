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
#include <set>
#include <string_view>
#include <variant>

#include "aspin/crypto/digest.hpp"

namespace aspin {

/// Identifier of a pluggable vote-tallying rule. The default rule passes a
/// proposal when strictly more yes than no votes were cast by unmasked
/// participants (quorum of one; the proposer's own yes always counts).
enum class VotingAlgorithm {
    strict_majority,
};

std::string_view voting_algorithm_name(VotingAlgorithm a);

struct VotingConfig {
    VotingAlgorithm algorithm = VotingAlgorithm::strict_majority;
    std::uint64_t voting_period = 0;  // blocks; must be >= 1
};

struct RegistryConfig {
    VotingConfig mgmt_voting;
    std::uint64_t pin_dispute_period = 0;  // blocks; > every voting period
};

struct SidechainRecord {
    Pbi pbi;
    VotingConfig voting;
    std::set<AccountId> unmasked;
    std::set<MaskedId> masked;
};

struct PinEntry {
    Pin pin;
    std::uint64_t posted_at = 0;
    bool contested = false;
    std::uint64_t contested_at = 0;  // meaningful only when contested
};

// Governance actions. Exactly the five proposal kinds the contract accepts.
struct AddUnmasked {
    AccountId account;
    auto operator<=>(const AddUnmasked&) const = default;
};
struct AddMasked {
    MaskedId member;
    auto operator<=>(const AddMasked&) const = default;
};
struct RemoveUnmasked {
    AccountId account;
    auto operator<=>(const RemoveUnmasked&) const = default;
};
struct RemoveMasked {
    MaskedId member;
    auto operator<=>(const RemoveMasked&) const = default;
};
struct ContestPin {
    MapKey target;
    auto operator<=>(const ContestPin&) const = default;
};

using ProposalAction =
    std::variant<AddUnmasked, AddMasked, RemoveUnmasked, RemoveMasked, ContestPin>;

std::string_view action_kind_name(const ProposalAction& a);

struct Proposal {
    std::uint64_t id = 0;
    Pbi sidechain;
    ProposalAction action;
    std::uint64_t opened_at = 0;
    std::map<AccountId, bool> votes;
    bool actioned = false;
    std::uint64_t actioned_at = 0;  // meaningful only when actioned
    bool passed = false;            // meaningful only when actioned
};

/// Submitted alongside a ContestPin proposal and revealed on-chain: the
/// previous key of the chain plus PRF(t). A prev_key equal to the reserved
/// all-zero key marks the contested pin as the chain's first, with the
/// genesis (zero) pin as predecessor.
struct ContestProof {
    MapKey prev_key;
    Digest256 prf_t;
    auto operator<=>(const ContestProof&) const = default;
};

struct RegistryState {
    RegistryConfig config;
    std::map<Pbi, SidechainRecord> sidechains;
    std::map<MapKey, PinEntry> pins;
    std::map<std::pair<Pbi, std::uint64_t>, Proposal> proposals;
    std::uint64_t height = 0;
    std::uint64_t next_proposal_id = 0;
};

}  // namespace aspin
