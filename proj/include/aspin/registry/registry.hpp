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
#include <vector>

#include "aspin/crypto/digest.hpp"
#include "aspin/registry/errors.hpp"
#include "aspin/registry/events.hpp"
#include "aspin/registry/types.hpp"

namespace aspin {

/// The anonymous-pinning contract as a deterministic single-writer state
/// machine. The block clock is supplied externally via advance_height; all
/// window checks use strict `<` for "within" and `>=` for "expired".
///
/// Posting pins is permissionless by design; every governance path (unmask,
/// propose, vote, action) requires the caller to be an unmasked participant
/// of the sidechain.
class Registry {
  public:
    enum class Outcome { failed = 0, passed = 1 };

    Registry() = default;

    Errc deploy(const RegistryConfig& config, const std::set<AccountId>& genesis_admins);

    Errc add_sidechain(const AccountId& caller, const Pbi& pbi, const VotingConfig& voting,
                       const std::set<AccountId>& unmasked0, const std::set<MaskedId>& masked0);

    Errc add_pin(const AccountId& caller, const MapKey& key, const Pin& pin);

    /// Read-only; returns the stored pin (the sentinel when contested) or
    /// nothing when the key is vacant.
    std::optional<Pin> get_pin(const MapKey& key) const;
    const PinEntry* find_pin(const MapKey& key) const;

    Errc unmask(const AccountId& caller, const Pbi& pbi, const Digest256& salt);

    Errc propose_vote(const AccountId& caller, const Pbi& pbi, const ProposalAction& action,
                      const std::optional<ContestProof>& contest_proof,
                      std::uint64_t* proposal_id = nullptr);

    Errc vote(const AccountId& caller, const Pbi& pbi, std::uint64_t proposal_id, bool approve);

    Errc action_votes(const AccountId& caller, const Pbi& pbi, std::uint64_t proposal_id,
                      Outcome* outcome = nullptr);

    Errc advance_height(std::uint64_t new_height);

    Errc is_pin_final(const MapKey& key, bool* final_out) const;

    const RegistryState& state() const { return state_; }
    bool deployed() const { return !state_.sidechains.empty(); }
    std::uint64_t height() const { return state_.height; }
    const std::vector<Event>& events() const { return events_; }

    std::string serialize() const { return serialize_state(state_); }

  private:
    const SidechainRecord* find_sidechain(const Pbi& pbi) const;
    bool is_unmasked_member(const Pbi& pbi, const AccountId& who) const;
    void emit(const AccountId& caller, EventBody body);

    RegistryState state_;
    std::vector<Event> events_;
};

/// Default tallying rule dispatch. Exposed for tests and the simulator.
bool tally_passed(VotingAlgorithm algorithm, const Proposal& proposal);

}  // namespace aspin
