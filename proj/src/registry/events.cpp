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

#include "aspin/registry/events.hpp"

#include "aspin/crypto/digest.hpp"

namespace aspin {

using nlohmann::ordered_json;

std::string_view voting_algorithm_name(VotingAlgorithm a) {
    switch (a) {
        case VotingAlgorithm::strict_majority: return "strict-majority";
    }
    return "unknown";
}

std::string_view action_kind_name(const ProposalAction& a) {
    struct Visitor {
        std::string_view operator()(const AddUnmasked&) { return "add_unmasked"; }
        std::string_view operator()(const AddMasked&) { return "add_masked"; }
        std::string_view operator()(const RemoveUnmasked&) { return "remove_unmasked"; }
        std::string_view operator()(const RemoveMasked&) { return "remove_masked"; }
        std::string_view operator()(const ContestPin&) { return "contest_pin"; }
    };
    return std::visit(Visitor{}, a);
}

std::string_view event_type_name(const EventBody& body) {
    struct Visitor {
        std::string_view operator()(const DeployedEvent&) { return "deployed"; }
        std::string_view operator()(const SidechainAddedEvent&) { return "sidechain_added"; }
        std::string_view operator()(const PinAddedEvent&) { return "pin_added"; }
        std::string_view operator()(const UnmaskedEvent&) { return "unmasked"; }
        std::string_view operator()(const ProposalOpenedEvent&) { return "proposal_opened"; }
        std::string_view operator()(const VoteCastEvent&) { return "vote_cast"; }
        std::string_view operator()(const ProposalActionedEvent&) { return "proposal_actioned"; }
        std::string_view operator()(const HeightAdvancedEvent&) { return "height_advanced"; }
        std::string_view operator()(const GovernanceLostEvent&) { return "governance_lost"; }
    };
    return std::visit(Visitor{}, body);
}

namespace {

ordered_json accounts_to_json(const std::set<AccountId>& accounts) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : accounts) arr.push_back(to_hex(a));
    return arr;
}

ordered_json masked_to_json(const std::set<MaskedId>& masked) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : masked) arr.push_back(to_hex(m.commitment));
    return arr;
}

ordered_json action_to_json(const ProposalAction& action) {
    ordered_json j;
    j["kind"] = std::string(action_kind_name(action));
    struct Visitor {
        ordered_json& j;
        void operator()(const AddUnmasked& a) { j["account"] = to_hex(a.account); }
        void operator()(const AddMasked& a) { j["member"] = to_hex(a.member.commitment); }
        void operator()(const RemoveUnmasked& a) { j["account"] = to_hex(a.account); }
        void operator()(const RemoveMasked& a) { j["member"] = to_hex(a.member.commitment); }
        void operator()(const ContestPin& a) { j["target"] = to_hex(a.target.value); }
    };
    std::visit(Visitor{j}, action);
    return j;
}

ordered_json payload_to_json(const EventBody& body) {
    struct Visitor {
        ordered_json operator()(const DeployedEvent& e) {
            ordered_json j;
            j["voting_algorithm"] = std::string(voting_algorithm_name(e.config.mgmt_voting.algorithm));
            j["voting_period"] = e.config.mgmt_voting.voting_period;
            j["pin_dispute_period"] = e.config.pin_dispute_period;
            j["genesis_admins"] = accounts_to_json(e.genesis_admins);
            return j;
        }
        ordered_json operator()(const SidechainAddedEvent& e) {
            ordered_json j;
            j["pbi"] = to_hex(e.pbi.id);
            j["voting_algorithm"] = std::string(voting_algorithm_name(e.voting.algorithm));
            j["voting_period"] = e.voting.voting_period;
            j["unmasked"] = accounts_to_json(e.unmasked);
            j["masked"] = masked_to_json(e.masked);
            return j;
        }
        ordered_json operator()(const PinAddedEvent& e) {
            ordered_json j;
            j["key"] = to_hex(e.key.value);
            j["pin"] = to_hex(e.pin.value);
            return j;
        }
        ordered_json operator()(const UnmaskedEvent& e) {
            ordered_json j;
            j["pbi"] = to_hex(e.pbi.id);
            j["commitment"] = to_hex(e.commitment.commitment);
            return j;
        }
        ordered_json operator()(const ProposalOpenedEvent& e) {
            ordered_json j;
            j["pbi"] = to_hex(e.pbi.id);
            j["id"] = e.id;
            j["action"] = action_to_json(e.action);
            if (e.proof) {
                ordered_json p;
                p["prev_key"] = to_hex(e.proof->prev_key.value);
                p["prf"] = to_hex(e.proof->prf_t);
                j["proof"] = p;
            }
            return j;
        }
        ordered_json operator()(const VoteCastEvent& e) {
            ordered_json j;
            j["pbi"] = to_hex(e.pbi.id);
            j["id"] = e.id;
            j["approve"] = e.approve;
            return j;
        }
        ordered_json operator()(const ProposalActionedEvent& e) {
            ordered_json j;
            j["pbi"] = to_hex(e.pbi.id);
            j["id"] = e.id;
            j["passed"] = e.passed;
            return j;
        }
        ordered_json operator()(const HeightAdvancedEvent& e) {
            ordered_json j;
            j["new_height"] = e.new_height;
            return j;
        }
        ordered_json operator()(const GovernanceLostEvent& e) {
            ordered_json j;
            j["pbi"] = to_hex(e.pbi.id);
            return j;
        }
    };
    return std::visit(Visitor{}, body);
}

}  // namespace

ordered_json event_to_json(const Event& ev) {
    ordered_json j;
    j["event_type"] = std::string(event_type_name(ev.body));
    j["height"] = ev.height;
    j["caller"] = to_hex(ev.caller);
    j["payload"] = payload_to_json(ev.body);
    return j;
}

std::string events_to_jsonl(const std::vector<Event>& events) {
    std::string out;
    for (const auto& ev : events) {
        out += event_to_json(ev).dump();
        out += '\n';
    }
    return out;
}

void apply_event(RegistryState& state, const Event& ev) {
    struct Visitor {
        RegistryState& s;
        const Event& ev;

        void operator()(const DeployedEvent& e) {
            s.config = e.config;
            SidechainRecord mgmt;
            mgmt.pbi = Pbi::management();
            mgmt.voting = e.config.mgmt_voting;
            mgmt.unmasked = e.genesis_admins;
            s.sidechains[mgmt.pbi] = mgmt;
        }
        void operator()(const SidechainAddedEvent& e) {
            SidechainRecord rec;
            rec.pbi = e.pbi;
            rec.voting = e.voting;
            rec.unmasked = e.unmasked;
            rec.masked = e.masked;
            s.sidechains[e.pbi] = rec;
        }
        void operator()(const PinAddedEvent& e) {
            PinEntry entry;
            entry.pin = e.pin;
            entry.posted_at = ev.height;
            s.pins[e.key] = entry;
        }
        void operator()(const UnmaskedEvent& e) {
            auto& rec = s.sidechains.at(e.pbi);
            rec.masked.erase(e.commitment);
            rec.unmasked.insert(ev.caller);
        }
        void operator()(const ProposalOpenedEvent& e) {
            Proposal p;
            p.id = e.id;
            p.sidechain = e.pbi;
            p.action = e.action;
            p.opened_at = ev.height;
            p.votes[ev.caller] = true;  // proposer's implicit yes
            s.proposals[{e.pbi, e.id}] = p;
            s.next_proposal_id = e.id + 1;
        }
        void operator()(const VoteCastEvent& e) {
            s.proposals.at({e.pbi, e.id}).votes[ev.caller] = e.approve;
        }
        void operator()(const ProposalActionedEvent& e) {
            auto& p = s.proposals.at({e.pbi, e.id});
            p.actioned = true;
            p.actioned_at = ev.height;
            p.passed = e.passed;
            if (!e.passed) return;
            auto& rec = s.sidechains.at(e.pbi);
            struct Apply {
                RegistryState& s;
                SidechainRecord& rec;
                const Event& ev;
                void operator()(const AddUnmasked& a) { rec.unmasked.insert(a.account); }
                void operator()(const AddMasked& a) { rec.masked.insert(a.member); }
                void operator()(const RemoveUnmasked& a) { rec.unmasked.erase(a.account); }
                void operator()(const RemoveMasked& a) { rec.masked.erase(a.member); }
                void operator()(const ContestPin& a) {
                    auto& entry = s.pins.at(a.target);
                    entry.pin = contested_sentinel();
                    entry.contested = true;
                    entry.contested_at = ev.height;
                }
            };
            std::visit(Apply{s, rec, ev}, p.action);
        }
        void operator()(const HeightAdvancedEvent& e) { s.height = e.new_height; }
        void operator()(const GovernanceLostEvent&) {}  // warning only
    };
    std::visit(Visitor{state, ev}, ev.body);
}

RegistryState replay_events(const std::vector<Event>& events) {
    RegistryState state;
    for (const auto& ev : events) apply_event(state, ev);
    return state;
}

std::string serialize_state(const RegistryState& state) {
    ordered_json j;
    j["height"] = state.height;
    j["next_proposal_id"] = state.next_proposal_id;
    {
        ordered_json cfg;
        cfg["voting_algorithm"] = std::string(voting_algorithm_name(state.config.mgmt_voting.algorithm));
        cfg["voting_period"] = state.config.mgmt_voting.voting_period;
        cfg["pin_dispute_period"] = state.config.pin_dispute_period;
        j["config"] = cfg;
    }
    {
        ordered_json arr = ordered_json::array();
        for (const auto& [pbi, rec] : state.sidechains) {
            ordered_json r;
            r["pbi"] = to_hex(pbi.id);
            r["voting_algorithm"] = std::string(voting_algorithm_name(rec.voting.algorithm));
            r["voting_period"] = rec.voting.voting_period;
            r["unmasked"] = accounts_to_json(rec.unmasked);
            r["masked"] = masked_to_json(rec.masked);
            arr.push_back(r);
        }
        j["sidechains"] = arr;
    }
    {
        ordered_json arr = ordered_json::array();
        for (const auto& [key, entry] : state.pins) {
            ordered_json e;
            e["key"] = to_hex(key.value);
            e["pin"] = to_hex(entry.pin.value);
            e["posted_at"] = entry.posted_at;
            e["contested"] = entry.contested;
            e["contested_at"] = entry.contested_at;
            arr.push_back(e);
        }
        j["pins"] = arr;
    }
    {
        ordered_json arr = ordered_json::array();
        for (const auto& [key, p] : state.proposals) {
            ordered_json e;
            e["pbi"] = to_hex(p.sidechain.id);
            e["id"] = p.id;
            e["action"] = action_to_json(p.action);
            e["opened_at"] = p.opened_at;
            ordered_json votes = ordered_json::array();
            for (const auto& [voter, approve] : p.votes) {
                ordered_json v;
                v["voter"] = to_hex(voter);
                v["approve"] = approve;
                votes.push_back(v);
            }
            e["votes"] = votes;
            e["actioned"] = p.actioned;
            e["actioned_at"] = p.actioned_at;
            e["passed"] = p.passed;
            arr.push_back(e);
        }
        j["proposals"] = arr;
    }
    return j.dump();
}

}  // namespace aspin
