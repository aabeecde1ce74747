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

#include "aspin/registry/registry.hpp"

#include "aspin/crypto/derive.hpp"

namespace aspin {

std::string_view errc_name(Errc e) {
    switch (e) {
        case Errc::ok: return "Ok";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::not_authorized: return "NotAuthorized";
        case Errc::duplicate_sidechain: return "DuplicateSidechain";
        case Errc::reserved_id: return "ReservedId";
        case Errc::key_occupied: return "KeyOccupied";
        case Errc::no_such_sidechain: return "NoSuchSidechain";
        case Errc::not_masked: return "NotMasked";
        case Errc::no_such_pin: return "NoSuchPin";
        case Errc::linkage_invalid: return "LinkageInvalid";
        case Errc::dispute_window_closed: return "DisputeWindowClosed";
        case Errc::duplicate_active_proposal: return "DuplicateActiveProposal";
        case Errc::no_such_proposal: return "NoSuchProposal";
        case Errc::voting_closed: return "VotingClosed";
        case Errc::already_voted: return "AlreadyVoted";
        case Errc::voting_still_open: return "VotingStillOpen";
        case Errc::already_actioned: return "AlreadyActioned";
        case Errc::clock_regression: return "ClockRegression";
        case Errc::invalid_height: return "InvalidHeight";
    }
    return "Unknown";
}

bool tally_passed(VotingAlgorithm algorithm, const Proposal& proposal) {
    switch (algorithm) {
        case VotingAlgorithm::strict_majority: {
            std::size_t yes = 0, no = 0;
            for (const auto& [voter, approve] : proposal.votes) (approve ? yes : no)++;
            return yes + no >= 1 && yes > no;
        }
    }
    return false;
}

const SidechainRecord* Registry::find_sidechain(const Pbi& pbi) const {
    auto it = state_.sidechains.find(pbi);
    return it == state_.sidechains.end() ? nullptr : &it->second;
}

bool Registry::is_unmasked_member(const Pbi& pbi, const AccountId& who) const {
    const SidechainRecord* rec = find_sidechain(pbi);
    return rec != nullptr && rec->unmasked.count(who) > 0;
}

void Registry::emit(const AccountId& caller, EventBody body) {
    Event ev;
    ev.height = state_.height;
    if (const auto* adv = std::get_if<HeightAdvancedEvent>(&body)) ev.height = adv->new_height;
    ev.caller = caller;
    ev.body = std::move(body);
    apply_event(state_, ev);
    events_.push_back(std::move(ev));
}

Errc Registry::deploy(const RegistryConfig& config, const std::set<AccountId>& genesis_admins) {
    if (deployed()) return Errc::invalid_config;
    if (genesis_admins.empty()) return Errc::invalid_config;
    if (config.mgmt_voting.voting_period < 1) return Errc::invalid_config;
    if (config.pin_dispute_period <= config.mgmt_voting.voting_period)
        return Errc::invalid_config;
    emit(AccountId::zero(), DeployedEvent{config, genesis_admins});
    return Errc::ok;
}

Errc Registry::add_sidechain(const AccountId& caller, const Pbi& pbi, const VotingConfig& voting,
                             const std::set<AccountId>& unmasked0,
                             const std::set<MaskedId>& masked0) {
    if (!is_unmasked_member(Pbi::management(), caller)) return Errc::not_authorized;
    if (pbi.is_management()) return Errc::reserved_id;
    if (find_sidechain(pbi) != nullptr) return Errc::duplicate_sidechain;
    if (voting.voting_period < 1) return Errc::invalid_config;
    if (voting.voting_period >= state_.config.pin_dispute_period) return Errc::invalid_config;
    emit(caller, SidechainAddedEvent{pbi, voting, unmasked0, masked0});
    return Errc::ok;
}

Errc Registry::add_pin(const AccountId& caller, const MapKey& key, const Pin& pin) {
    // Deliberately no membership check: anyone may post, that is the
    // anonymity property. The caller lands in the event log only.
    if (state_.pins.count(key) > 0) return Errc::key_occupied;
    emit(caller, PinAddedEvent{key, pin});
    return Errc::ok;
}

std::optional<Pin> Registry::get_pin(const MapKey& key) const {
    auto it = state_.pins.find(key);
    if (it == state_.pins.end()) return std::nullopt;
    return it->second.pin;
}

const PinEntry* Registry::find_pin(const MapKey& key) const {
    auto it = state_.pins.find(key);
    return it == state_.pins.end() ? nullptr : &it->second;
}

Errc Registry::unmask(const AccountId& caller, const Pbi& pbi, const Digest256& salt) {
    const SidechainRecord* rec = find_sidechain(pbi);
    if (rec == nullptr) return Errc::no_such_sidechain;
    MaskedId commitment = mask_participant(caller, salt);
    if (rec->masked.count(commitment) == 0) return Errc::not_masked;
    emit(caller, UnmaskedEvent{pbi, commitment});
    return Errc::ok;
}

Errc Registry::propose_vote(const AccountId& caller, const Pbi& pbi, const ProposalAction& action,
                            const std::optional<ContestProof>& contest_proof,
                            std::uint64_t* proposal_id) {
    if (!is_unmasked_member(pbi, caller)) return Errc::not_authorized;

    std::optional<ContestProof> kept_proof;
    if (const auto* contest = std::get_if<ContestPin>(&action)) {
        if (!contest_proof) return Errc::linkage_invalid;
        const PinEntry* target = find_pin(contest->target);
        if (target == nullptr || target->contested) return Errc::no_such_pin;

        Pin prev_pin = genesis_pin();
        if (contest_proof->prev_key != genesis_prev_key()) {
            const PinEntry* prev = find_pin(contest_proof->prev_key);
            if (prev == nullptr || prev->contested) return Errc::no_such_pin;
            prev_pin = prev->pin;
        }
        if (state_.height - target->posted_at >= state_.config.pin_dispute_period)
            return Errc::dispute_window_closed;
        if (derive_map_key(pbi, prev_pin, contest_proof->prf_t) != contest->target)
            return Errc::linkage_invalid;
        kept_proof = contest_proof;
    }

    for (const auto& [key, p] : state_.proposals)
        if (p.sidechain == pbi && !p.actioned && p.action == action)
            return Errc::duplicate_active_proposal;

    std::uint64_t id = state_.next_proposal_id;
    emit(caller, ProposalOpenedEvent{pbi, id, action, kept_proof});
    if (proposal_id != nullptr) *proposal_id = id;
    return Errc::ok;
}

Errc Registry::vote(const AccountId& caller, const Pbi& pbi, std::uint64_t proposal_id,
                    bool approve) {
    if (!is_unmasked_member(pbi, caller)) return Errc::not_authorized;
    auto it = state_.proposals.find({pbi, proposal_id});
    if (it == state_.proposals.end()) return Errc::no_such_proposal;
    const Proposal& p = it->second;
    if (p.actioned) return Errc::voting_closed;
    const std::uint64_t voting_period = find_sidechain(pbi)->voting.voting_period;
    if (state_.height - p.opened_at >= voting_period) return Errc::voting_closed;
    if (p.votes.count(caller) > 0) return Errc::already_voted;
    emit(caller, VoteCastEvent{pbi, proposal_id, approve});
    return Errc::ok;
}

Errc Registry::action_votes(const AccountId& caller, const Pbi& pbi, std::uint64_t proposal_id,
                            Outcome* outcome) {
    if (!is_unmasked_member(pbi, caller)) return Errc::not_authorized;
    auto it = state_.proposals.find({pbi, proposal_id});
    if (it == state_.proposals.end()) return Errc::no_such_proposal;
    const Proposal& p = it->second;
    if (p.actioned) return Errc::already_actioned;
    const SidechainRecord* rec = find_sidechain(pbi);
    if (state_.height - p.opened_at < rec->voting.voting_period) return Errc::voting_still_open;

    if (const auto* contest = std::get_if<ContestPin>(&p.action)) {
        const PinEntry* target = find_pin(contest->target);
        if (target == nullptr || target->contested) return Errc::no_such_pin;
        if (state_.height - target->posted_at >= state_.config.pin_dispute_period)
            return Errc::dispute_window_closed;
    }

    bool passed = tally_passed(rec->voting.algorithm, p);
    bool removal = std::holds_alternative<RemoveUnmasked>(p.action);
    emit(caller, ProposalActionedEvent{pbi, proposal_id, passed});
    if (passed && removal && find_sidechain(pbi)->unmasked.empty())
        emit(AccountId::zero(), GovernanceLostEvent{pbi});
    if (outcome != nullptr) *outcome = passed ? Outcome::passed : Outcome::failed;
    return Errc::ok;
}

Errc Registry::advance_height(std::uint64_t new_height) {
    if (new_height < state_.height) return Errc::clock_regression;
    if (new_height == state_.height) return Errc::ok;  // no-op
    emit(AccountId::zero(), HeightAdvancedEvent{new_height});
    return Errc::ok;
}

Errc Registry::is_pin_final(const MapKey& key, bool* final_out) const {
    const PinEntry* entry = find_pin(key);
    if (entry == nullptr) return Errc::no_such_pin;
    *final_out =
        !entry->contested && state_.height - entry->posted_at >= state_.config.pin_dispute_period;
    return Errc::ok;
}

}  // namespace aspin
