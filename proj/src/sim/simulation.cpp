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

#include "aspin/sim/simulation.hpp"

#include <algorithm>
#include <set>

#include "aspin/crypto/derive.hpp"
#include "aspin/crypto/keccak.hpp"

namespace aspin::sim {

using nlohmann::ordered_json;

std::string events_to_jsonl(const std::vector<SimEvent>& events) {
    std::string out;
    for (const auto& ev : events) {
        ordered_json j;
        j["event_type"] = ev.type;
        j["height"] = ev.height;
        j["caller"] = to_hex(ev.caller);
        j["payload"] = ev.payload;
        out += j.dump();
        out += '\n';
    }
    return out;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

Digest256 stream_value(std::string_view tag, std::uint64_t seed, const std::string& chain,
                       std::uint64_t n) {
    Keccak256 h;
    h.update(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(tag.data()), tag.size()));
    h.update_be64(seed);
    h.update(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(chain.data()), chain.size()));
    h.update_be64(n);
    return h.finalize();
}

}  // namespace

std::optional<std::string> Simulation::validate() const {
    const auto& cfg = config_;
    if (cfg.duration_ticks < 1) return "duration_ticks must be at least 1";
    if (cfg.chains.empty()) return "no chains configured";

    std::map<std::string, const ChainConfig*> by_id;
    std::optional<std::uint64_t> seconds_per_tick;
    for (const auto& c : cfg.chains) {
        if (c.id.empty()) return "chain with empty id";
        if (!by_id.emplace(c.id, &c).second) return "duplicate chain id: " + c.id;
        if (c.ticks_per_block < 1) return c.id + ": ticks_per_block must be >= 1";
        if (c.block_period_s < 1) return c.id + ": block_period_s must be >= 1";
        if (c.block_period_s % c.ticks_per_block != 0)
            return c.id + ": block_period_s must be a multiple of ticks_per_block";
        std::uint64_t spt = c.block_period_s / c.ticks_per_block;
        if (seconds_per_tick && *seconds_per_tick != spt)
            return "chains disagree on seconds per tick (block_period_s / ticks_per_block)";
        seconds_per_tick = spt;
        if (c.mode == FinalityMode::probabilistic && c.confirm_depth < 1)
            return c.id + ": probabilistic finality needs confirm_depth >= 1";
        if (c.registry) {
            if (c.registry->genesis_admins.empty()) return c.id + ": registry needs genesis admins";
            if (c.registry->mgmt_voting.voting_period < 1)
                return c.id + ": management voting period must be >= 1";
            if (c.registry->pin_dispute_period <= c.registry->mgmt_voting.voting_period)
                return c.id + ": pin dispute period must exceed the management voting period";
        }
    }
    for (const auto& c : cfg.chains) {
        if (!c.pin_link) continue;
        const auto& link = *c.pin_link;
        auto parent = by_id.find(link.parent);
        if (parent == by_id.end()) return c.id + ": unknown parent chain " + link.parent;
        if (link.parent == c.id) return c.id + ": cannot pin to itself";
        if (!parent->second->registry) return c.id + ": parent " + link.parent + " hosts no registry";
        if (link.pbi.is_management()) return c.id + ": the all-zero PBI is reserved";
        if (link.pinning_period < 1) return c.id + ": pinning_period must be >= 1";
        if (link.voting.voting_period < 1) return c.id + ": sidechain voting period must be >= 1";
        if (link.voting.voting_period >= parent->second->registry->pin_dispute_period)
            return c.id + ": sidechain voting period must be below the dispute period";
        // hierarchy must be acyclic
        std::set<std::string> seen{c.id};
        const ChainConfig* cur = parent->second;
        while (cur != nullptr) {
            if (!seen.insert(cur->id).second) return "pinning topology contains a cycle";
            cur = cur->pin_link ? by_id.at(cur->pin_link->parent) : nullptr;
        }
    }
    std::set<AccountId> accounts;
    for (const auto& a : cfg.actors) {
        if (!accounts.insert(a.account).second) return "duplicate actor account";
        if (by_id.find(a.chain) == by_id.end()) return "actor references unknown chain " + a.chain;
        if (a.role == ActorRole::masked_member && !a.salt) return "masked actor without salt";
        for (const auto& w : a.watches) {
            auto it = by_id.find(w);
            if (it == by_id.end() || !it->second->pin_link)
                return "actor watches chain without a pin link: " + w;
            if (!a.secret_access) return "watcher without secret access: " + to_hex(a.account);
        }
        for (const auto& p : a.posts_for) {
            auto it = by_id.find(p);
            if (it == by_id.end() || !it->second->pin_link)
                return "actor posts for chain without a pin link: " + p;
        }
    }
    for (const auto& s : cfg.script) {
        auto it = by_id.find(s.chain);
        if (it == by_id.end()) return "script references unknown chain " + s.chain;
        if (s.kind == ScriptKind::revert_rewrite && it->second->registry)
            return "script reverts a registry-hosting chain: " + s.chain;
        if ((s.kind == ScriptKind::false_pin || s.kind == ScriptKind::squat_next_key) &&
            !it->second->pin_link)
            return "script pins against a chain without a pin link: " + s.chain;
    }
    return std::nullopt;
}

namespace {

struct HostRuntime {
    std::string id;
    Registry registry;
    std::size_t event_cursor = 0;  // drained into the sim log up to here
    std::uint64_t dispute = 0;
};

struct ChainRuntime {
    const ChainConfig* cfg = nullptr;
    ChainNode canonical;
    ChainNode honest;
    bool diverged = false;
};

// Common-knowledge key-chain state for one pinned chain: everyone holding the
// secret derives the same next key from the public map, so one tracker per
// chain is exactly the per-participant view.
struct Tracker {
    Pin last_good = genesis_pin();
    MapKey last_good_key = genesis_prev_key();
    std::uint64_t counter = 0;       // next PRF index to consume
    std::uint64_t next_ordinal = 0;  // next due pin (0-based)
    MapKey watch_key;
    bool posted_pending = false;   // guardian already posted at watch_key
    bool occupied_backoff = false;  // someone else holds watch_key; wait it out
};

// Per (actor, watched chain) contest progress. Reset whenever the watch key
// rolls over or the slot resolves.
struct WatchProgress {
    bool mismatch_logged = false;
    bool have_proposal = false;
    std::uint64_t proposal_id = 0;
    bool voted = false;
    bool duplicate_wait = false;  // lost the propose race; waiting to see the winner
    bool gave_up = false;
};

struct Runner {
    const SimConfig& cfg;
    std::vector<ChainRuntime> chains;
    std::map<std::string, std::size_t> chain_index;
    std::map<std::string, HostRuntime> hosts;
    std::map<std::string, Tracker> trackers;
    std::map<std::pair<AccountId, std::string>, WatchProgress> progress;
    std::map<AccountId, std::set<std::string>> unmasked_done;  // actor -> chains unmasked on

    RunResult result;
    std::map<MapKey, std::pair<std::string, std::size_t>> fact_index;  // key -> (chain, idx)

    explicit Runner(const SimConfig& config) : cfg(config) {}

    ChainRuntime& chain(const std::string& id) { return chains[chain_index.at(id)]; }
    const PinLinkConfig& link(const std::string& id) { return *chain(id).cfg->pin_link; }
    HostRuntime& host_of(const std::string& pinned_chain) {
        return hosts.at(link(pinned_chain).parent);
    }

    std::uint64_t observe_height(const ChainRuntime& host_chain) const {
        const ChainNode& node = host_chain.canonical;
        if (node.empty()) return 0;
        std::uint64_t tip = node.tip_height();
        std::uint64_t lag =
            node.mode() == FinalityMode::instant ? 1 : node.confirm_depth();
        return tip >= lag ? tip - lag : 0;
    }

    void log_event(const std::string& type, std::uint64_t height, const AccountId& caller,
                   ordered_json payload) {
        result.log.push_back(SimEvent{type, height, caller, std::move(payload)});
    }

    void drain_registry(HostRuntime& host) {
        const auto& events = host.registry.events();
        for (; host.event_cursor < events.size(); ++host.event_cursor) {
            const Event& ev = events[host.event_cursor];
            ordered_json wrapped;
            wrapped["registry"] = host.id;
            ordered_json inner = event_to_json(ev);
            for (auto& [k, v] : inner["payload"].items()) wrapped[k] = v;
            log_event(std::string(event_type_name(ev.body)), ev.height, ev.caller,
                      std::move(wrapped));
        }
    }

    void count_op(HostRuntime& host, const std::string& row) { result.op_counts[host.id][row]++; }

    void count_rejected(const std::string& op, Errc e, HostRuntime& host,
                        const AccountId& caller, ordered_json context) {
        result.rejected_counts[std::string(errc_name(e))]++;
        ordered_json p;
        p["registry"] = host.id;
        p["op"] = op;
        p["error"] = std::string(errc_name(e));
        for (auto& [k, v] : context.items()) p[k] = v;
        log_event("op_rejected", host.registry.height(), caller, std::move(p));
    }

    // ---- setup ----------------------------------------------------------

    void setup() {
        chains.reserve(cfg.chains.size());
        for (const auto& c : cfg.chains) {
            ChainRuntime rt;
            rt.cfg = &c;
            rt.canonical = ChainNode(c.id, c.block_period_s, c.mode, c.confirm_depth);
            rt.honest = ChainNode(c.id, c.block_period_s, c.mode, c.confirm_depth);
            chain_index[c.id] = chains.size();
            chains.push_back(std::move(rt));
            if (c.registry) {
                HostRuntime host;
                host.id = c.id;
                host.dispute = c.registry->pin_dispute_period;
                hosts.emplace(c.id, std::move(host));
            }
        }
        // deploy registries, then register every pinning sidechain
        for (auto& [id, host] : hosts) {
            const auto& rc = *chain(id).cfg->registry;
            RegistryConfig config{rc.mgmt_voting, rc.pin_dispute_period};
            std::set<AccountId> admins(rc.genesis_admins.begin(), rc.genesis_admins.end());
            host.registry.deploy(config, admins);
            count_op(host, "deploy");
            drain_registry(host);
        }
        for (const auto& c : cfg.chains) {
            if (!c.pin_link) continue;
            auto& host = hosts.at(c.pin_link->parent);
            const AccountId& admin = chain(c.pin_link->parent).cfg->registry->genesis_admins.front();
            std::set<AccountId> unmasked;
            std::set<MaskedId> masked;
            for (const auto& a : cfg.actors) {
                bool home = a.chain == c.id;
                if (home && a.role == ActorRole::masked_member)
                    masked.insert(mask_participant(a.account, *a.salt));
                else if ((home && (a.role == ActorRole::member ||
                                   a.role == ActorRole::quiet_guardian)) ||
                         (!home && contains(a.watches, c.id)))
                    unmasked.insert(a.account);
            }
            host.registry.add_sidechain(admin, c.pin_link->pbi, c.pin_link->voting, unmasked,
                                        masked);
            count_op(host, "add_sidechain");
            drain_registry(host);

            Tracker t;
            t.watch_key = derive_map_key(c.pin_link->pbi, t.last_good,
                                         prf_value(c.pin_link->secret, t.counter));
            trackers[c.id] = t;
        }
    }

    // ---- pin facts -------------------------------------------------------

    void record_fact(const std::string& chain_id, const Tracker& t, const MapKey& key,
                     const Pin& pin, std::uint64_t pinned_height, std::uint64_t posted_at,
                     std::uint64_t tick, const AccountId& poster) {
        PinFact fact;
        fact.chain = chain_id;
        fact.pbi = link(chain_id).pbi;
        fact.ordinal = t.next_ordinal;
        fact.prf_index = t.counter;
        fact.key = key;
        fact.pin = pin;
        fact.pinned_height = pinned_height;
        fact.posted_at = posted_at;
        fact.posted_tick = tick;
        fact.poster = poster;
        auto& facts = result.pin_facts[chain_id];
        fact_index[key] = {chain_id, facts.size()};
        facts.push_back(fact);
    }

    PinFact* find_fact(const MapKey& key) {
        auto it = fact_index.find(key);
        if (it == fact_index.end()) return nullptr;
        return &result.pin_facts[it->second.first][it->second.second];
    }

    // ---- tracker advancement --------------------------------------------

    void reset_progress_for(const std::string& chain_id) {
        for (auto& [key, ws] : progress)
            if (key.second == chain_id) ws = WatchProgress{};
    }

    void advance_tracker(const std::string& chain_id, std::uint64_t tick) {
        Tracker& t = trackers.at(chain_id);
        HostRuntime& host = host_of(chain_id);
        ChainRuntime& host_chain = chain(host.id);
        const PinEntry* entry = host.registry.find_pin(t.watch_key);
        if (entry == nullptr) return;
        std::uint64_t vh = observe_height(host_chain);
        if (entry->posted_at > vh) return;
        const auto& lnk = link(chain_id);
        if (entry->contested) {
            if (entry->contested_at > vh) return;
            if (PinFact* fact = find_fact(t.watch_key)) fact->status = PinFact::Status::contested;
            ordered_json p;
            p["chain"] = chain_id;
            p["key"] = to_hex(t.watch_key.value);
            p["burned_prf_index"] = t.counter;
            log_event("pin_rollover", host.registry.height(), AccountId::zero(), std::move(p));
            t.counter += 1;
            t.watch_key = derive_map_key(lnk.pbi, t.last_good, prf_value(lnk.secret, t.counter));
            t.posted_pending = false;
            t.occupied_backoff = false;
            reset_progress_for(chain_id);
            (void)tick;
            return;
        }
        if (host.registry.height() - entry->posted_at >= host.dispute) {
            if (PinFact* fact = find_fact(t.watch_key))
                fact->status = PinFact::Status::accepted_final;
            ordered_json p;
            p["chain"] = chain_id;
            p["key"] = to_hex(t.watch_key.value);
            p["pin"] = to_hex(entry->pin.value);
            p["ordinal"] = t.next_ordinal;
            log_event("pin_finalized", host.registry.height(), AccountId::zero(), std::move(p));
            t.last_good = entry->pin;
            t.last_good_key = t.watch_key;
            t.counter += 1;
            t.next_ordinal += 1;
            t.watch_key = derive_map_key(lnk.pbi, t.last_good, prf_value(lnk.secret, t.counter));
            t.posted_pending = false;
            t.occupied_backoff = false;
            reset_progress_for(chain_id);
        }
    }

    // ---- script ----------------------------------------------------------

    void run_script_event(const ScriptEvent& s, std::uint64_t tick) {
        ChainRuntime& rt = chain(s.chain);
        switch (s.kind) {
            case ScriptKind::revert_rewrite: {
                if (rt.canonical.empty() || s.to_height >= rt.canonical.tip_height()) {
                    result.warnings.push_back("script revert out of range on " + s.chain);
                    return;
                }
                std::uint64_t old_tip = rt.canonical.tip_height();
                std::vector<Digest256> roots;
                for (std::uint64_t n = s.to_height + 1; n <= old_tip; ++n)
                    roots.push_back(stream_value("rewrite", cfg.seed, s.chain, n));
                rt.canonical.revert_chain(s.to_height, roots);
                rt.diverged = true;
                ordered_json p;
                p["chain"] = s.chain;
                p["to_height"] = s.to_height;
                p["new_tip"] = to_hex(rt.canonical.tip().hash);
                log_event("chain_reverted", rt.canonical.tip_height(), AccountId::zero(),
                          std::move(p));
                return;
            }
            case ScriptKind::restore: {
                rt.canonical = rt.honest;
                rt.diverged = false;
                ordered_json p;
                p["chain"] = s.chain;
                p["tip"] = to_hex(rt.canonical.tip().hash);
                log_event("chain_restored", rt.canonical.tip_height(), AccountId::zero(),
                          std::move(p));
                return;
            }
            case ScriptKind::false_pin:
            case ScriptKind::squat_next_key: {
                Tracker& t = trackers.at(s.chain);
                HostRuntime& host = host_of(s.chain);
                Pin bogus{stream_value("garbage", cfg.seed, s.chain, tick)};
                Errc rc = host.registry.add_pin(s.poster, t.watch_key, bogus);
                const char* label =
                    s.kind == ScriptKind::false_pin ? "false_pin" : "squat_next_key";
                if (rc == Errc::ok) {
                    count_op(host, "add_pin");
                    std::uint64_t nominal = (t.next_ordinal + 1) * link(s.chain).pinning_period;
                    record_fact(s.chain, t, t.watch_key, bogus, nominal, host.registry.height(),
                                tick, s.poster);
                    drain_registry(host);
                    ordered_json p;
                    p["chain"] = s.chain;
                    p["kind"] = label;
                    p["key"] = to_hex(t.watch_key.value);
                    log_event("adversary_pin", host.registry.height(), s.poster, std::move(p));
                } else {
                    ordered_json ctx;
                    ctx["kind"] = label;
                    count_rejected("add_pin", rc, host, s.poster, std::move(ctx));
                }
                return;
            }
        }
    }

    // ---- actor duties ----------------------------------------------------

    bool guardian_duty(const ActorConfig& actor, const std::string& pinned_id,
                       HostRuntime& host, std::uint64_t tick) {
        Tracker& t = trackers.at(pinned_id);
        const auto& lnk = link(pinned_id);
        ChainRuntime& pinned = chain(pinned_id);
        ChainRuntime& host_chain = chain(host.id);
        std::uint64_t due_height = (t.next_ordinal + 1) * lnk.pinning_period;
        if (pinned.canonical.empty() || pinned.canonical.tip_height() < due_height) return false;
        if (t.posted_pending || t.occupied_backoff) return false;
        const PinEntry* occupied = host.registry.find_pin(t.watch_key);
        if (occupied != nullptr && occupied->posted_at <= observe_height(host_chain)) {
            t.occupied_backoff = true;  // visibly taken; wait for the dispute machinery
            return false;
        }
        Pin value{pinned.canonical.header(due_height).hash};
        Errc rc = host.registry.add_pin(actor.account, t.watch_key, value);
        if (rc == Errc::ok) {
            count_op(host, "add_pin");
            record_fact(pinned_id, t, t.watch_key, value, due_height, host.registry.height(),
                        tick, actor.account);
            t.posted_pending = true;
            drain_registry(host);
        } else {
            ordered_json ctx;
            ctx["chain"] = pinned_id;
            ctx["key"] = to_hex(t.watch_key.value);
            count_rejected("add_pin", rc, host, actor.account, std::move(ctx));
            if (rc == Errc::key_occupied) t.occupied_backoff = true;
        }
        return true;
    }

    // Finds the open, visible contest proposal for `target` on `pbi`.
    const Proposal* visible_contest(const HostRuntime& host, std::uint64_t vh, const Pbi& pbi,
                                    const MapKey& target) const {
        for (const auto& [key, p] : host.registry.state().proposals) {
            if (p.sidechain != pbi || p.actioned || p.opened_at > vh) continue;
            if (const auto* c = std::get_if<ContestPin>(&p.action); c && c->target == target)
                return &p;
        }
        return nullptr;
    }

    bool watcher_duty(const ActorConfig& actor, const std::string& watched_id, HostRuntime& host,
                      std::uint64_t tick) {
        Tracker& t = trackers.at(watched_id);
        const auto& lnk = link(watched_id);
        ChainRuntime& host_chain = chain(host.id);
        std::uint64_t vh = observe_height(host_chain);
        const PinEntry* entry = host.registry.find_pin(t.watch_key);
        if (entry == nullptr || entry->posted_at > vh || entry->contested) return false;

        std::uint64_t due_height = (t.next_ordinal + 1) * lnk.pinning_period;
        ChainRuntime& watched = chain(watched_id);
        if (!watched.honest.has_height(due_height)) return false;
        Pin expected{watched.honest.header(due_height).hash};
        if (entry->pin == expected) return false;  // agreed; nothing to do

        WatchProgress& ws = progress[{actor.account, watched_id}];
        if (ws.gave_up) return false;
        if (!ws.mismatch_logged) {
            ordered_json p;
            p["chain"] = watched_id;
            p["key"] = to_hex(t.watch_key.value);
            p["posted"] = to_hex(entry->pin.value);
            p["expected"] = to_hex(expected.value);
            log_event("watcher_mismatch", host.registry.height(), actor.account, std::move(p));
            ws.mismatch_logged = true;
        }

        // Masked watchers reveal themselves before any governance move.
        if (actor.role == ActorRole::masked_member && actor.chain == watched_id &&
            unmasked_done[actor.account].count(watched_id) == 0) {
            Errc rc = host.registry.unmask(actor.account, lnk.pbi, *actor.salt);
            if (rc == Errc::ok) {
                count_op(host, "unmask");
                unmasked_done[actor.account].insert(watched_id);
                drain_registry(host);
            } else {
                count_rejected("unmask", rc, host, actor.account, {});
            }
            return true;
        }

        // Vote on (or action) the proposal we know about, else try to open one.
        const Proposal* known = nullptr;
        if (ws.have_proposal) {
            auto it = host.registry.state().proposals.find({lnk.pbi, ws.proposal_id});
            known = it == host.registry.state().proposals.end() ? nullptr : &it->second;
        }
        if (known == nullptr) {
            known = visible_contest(host, vh, lnk.pbi, t.watch_key);
            if (known != nullptr) {
                ws.have_proposal = true;
                ws.proposal_id = known->id;
            }
        }
        if (known != nullptr) {
            if (known->actioned) {
                // actioned but pin stands: the contest failed; retry while the
                // dispute window is open
                ws = WatchProgress{};
                ws.mismatch_logged = true;
                return false;
            }
            if (!ws.voted && known->votes.count(actor.account) == 0) {
                Errc rc = host.registry.vote(actor.account, lnk.pbi, known->id, true);
                if (rc == Errc::ok) {
                    count_op(host, "vote");
                    ws.voted = true;
                    drain_registry(host);
                } else {
                    ordered_json ctx;
                    ctx["id"] = known->id;
                    count_rejected("vote", rc, host, actor.account, std::move(ctx));
                }
                return true;
            }
            ws.voted = true;
            if (host.registry.height() - known->opened_at >= lnk.voting.voting_period) {
                Registry::Outcome outcome;
                Errc rc = host.registry.action_votes(actor.account, lnk.pbi, known->id, &outcome);
                if (rc == Errc::ok) {
                    count_op(host, "action_votes/" +
                                       std::string(action_kind_name(known->action)));
                    drain_registry(host);
                    if (outcome == Registry::Outcome::failed) {
                        ws = WatchProgress{};
                        ws.mismatch_logged = true;
                    }
                } else if (rc == Errc::dispute_window_closed) {
                    ordered_json p;
                    p["chain"] = watched_id;
                    p["key"] = to_hex(t.watch_key.value);
                    log_event("watcher_defeated", host.registry.height(), actor.account,
                              std::move(p));
                    ws.gave_up = true;
                } else {
                    ordered_json ctx;
                    ctx["id"] = known->id;
                    count_rejected("action_votes", rc, host, actor.account, std::move(ctx));
                }
                return true;
            }
            return false;  // voting still open, nothing to do yet
        }

        if (ws.duplicate_wait) return false;  // a rival proposal exists; wait to see it

        ContestProof proof{t.last_good_key, prf_value(lnk.secret, t.counter)};
        std::uint64_t id = 0;
        Errc rc = host.registry.propose_vote(actor.account, lnk.pbi, ContestPin{t.watch_key},
                                             proof, &id);
        if (rc == Errc::ok) {
            count_op(host, "propose_vote/contest_pin");
            ws.have_proposal = true;
            ws.proposal_id = id;
            ws.voted = true;  // proposer's implicit yes
            drain_registry(host);
        } else if (rc == Errc::duplicate_active_proposal) {
            ordered_json ctx;
            ctx["chain"] = watched_id;
            count_rejected("propose_vote", rc, host, actor.account, std::move(ctx));
            ws.duplicate_wait = true;
        } else if (rc == Errc::dispute_window_closed) {
            ordered_json p;
            p["chain"] = watched_id;
            p["key"] = to_hex(t.watch_key.value);
            log_event("watcher_defeated", host.registry.height(), actor.account, std::move(p));
            ws.gave_up = true;
        } else {
            ordered_json ctx;
            ctx["chain"] = watched_id;
            count_rejected("propose_vote", rc, host, actor.account, std::move(ctx));
        }
        return true;
    }

    bool opposer_duty(const ActorConfig& actor, const std::string& pinned_id, HostRuntime& host) {
        const auto& lnk = link(pinned_id);
        std::uint64_t vh = observe_height(chain(host.id));
        for (const auto& [key, p] : host.registry.state().proposals) {
            if (p.sidechain != lnk.pbi || p.actioned || p.opened_at > vh) continue;
            if (!std::holds_alternative<ContestPin>(p.action)) continue;
            if (p.votes.count(actor.account) > 0) continue;
            Errc rc = host.registry.vote(actor.account, lnk.pbi, p.id, false);
            if (rc == Errc::ok) {
                count_op(host, "vote");
                drain_registry(host);
            } else {
                ordered_json ctx;
                ctx["id"] = p.id;
                count_rejected("vote", rc, host, actor.account, std::move(ctx));
            }
            return true;
        }
        return false;
    }

    void actor_step(const ActorConfig& actor, const std::string& host_id, std::uint64_t tick) {
        HostRuntime& host = hosts.at(host_id);
        for (const auto& pinned : actor.posts_for)
            if (link(pinned).parent == host_id && guardian_duty(actor, pinned, host, tick))
                return;
        for (const auto& watched : actor.watches)
            if (link(watched).parent == host_id && watcher_duty(actor, watched, host, tick))
                return;
        if (actor.oppose_contests) {
            const ChainConfig* home = chain(actor.chain).cfg;
            if (home->pin_link && home->pin_link->parent == host_id)
                opposer_duty(actor, actor.chain, host);
        }
    }

    // ---- finality measurement -------------------------------------------

    std::optional<std::uint64_t> covered_tick(const std::string& chain_id, const PinFact& fact) {
        const auto& lnk = link(chain_id);
        HostRuntime& host = hosts.at(lnk.parent);
        ChainRuntime& host_chain = chain(lnk.parent);
        std::uint64_t final_height = fact.posted_at + host.dispute;
        if (!host_chain.canonical.has_height(final_height)) return std::nullopt;
        std::uint64_t tick = final_height * host_chain.cfg->ticks_per_block;
        if (!host_chain.cfg->pin_link) return tick;  // root layer
        for (const PinFact& up : result.pin_facts[lnk.parent]) {
            if (up.status != PinFact::Status::accepted_final) continue;
            if (up.pinned_height < final_height) continue;
            auto sub = covered_tick(lnk.parent, up);
            if (!sub) return std::nullopt;
            return std::max(tick, *sub);
        }
        return std::nullopt;
    }

    void measure_finality() {
        for (auto& [chain_id, facts] : result.pin_facts) {
            std::uint64_t prev_height = 0;
            std::uint64_t worst = 0;
            bool any = false;
            for (const PinFact& fact : facts) {
                if (fact.status != PinFact::Status::accepted_final) continue;
                std::uint64_t first_covered = prev_height + 1;
                prev_height = fact.pinned_height;
                auto cover = covered_tick(chain_id, fact);
                if (!cover) continue;
                std::uint64_t mint_tick = first_covered * chain(chain_id).cfg->ticks_per_block;
                if (*cover < mint_tick) continue;
                worst = std::max(worst, *cover - mint_tick);
                any = true;
            }
            if (any) result.worst_final_age_ticks[chain_id] = worst;
        }
    }

    // ---- main loop -------------------------------------------------------

    RunResult run() {
        setup();
        result.seconds_per_tick =
            cfg.chains.front().block_period_s / cfg.chains.front().ticks_per_block;

        for (std::uint64_t tick = 0; tick < cfg.duration_ticks; ++tick) {
            std::vector<std::string> minted_hosts;
            for (auto& rt : chains) {
                if (tick % rt.cfg->ticks_per_block != 0) continue;
                std::uint64_t number = tick / rt.cfg->ticks_per_block;
                Digest256 root = stream_value("tx", cfg.seed, rt.cfg->id, number);
                rt.honest.mint_block(root);
                const BlockHeader& head = rt.canonical.mint_block(
                    rt.diverged ? stream_value("rewrite", cfg.seed, rt.cfg->id, number) : root);
                ordered_json p;
                p["chain"] = rt.cfg->id;
                p["number"] = head.number;
                p["hash"] = to_hex(head.hash);
                log_event("block_minted", head.number, AccountId::zero(), std::move(p));
                if (rt.cfg->registry) {
                    auto& host = hosts.at(rt.cfg->id);
                    host.registry.advance_height(head.number);
                    drain_registry(host);
                    minted_hosts.push_back(rt.cfg->id);
                }
            }
            for (const auto& s : cfg.script)
                if (s.tick == tick) run_script_event(s, tick);
            for (const auto& host_id : minted_hosts) {
                for (const auto& c : cfg.chains)
                    if (c.pin_link && c.pin_link->parent == host_id)
                        advance_tracker(c.id, tick);
                for (const auto& actor : cfg.actors) actor_step(actor, host_id, tick);
            }
        }

        // Trailing pins that aged past the dispute window without another
        // observation slot still count as final.
        for (auto& [chain_id, facts] : result.pin_facts) {
            HostRuntime& host = host_of(chain_id);
            for (auto& fact : facts) {
                if (fact.status != PinFact::Status::pending) continue;
                const PinEntry* entry = host.registry.find_pin(fact.key);
                if (entry != nullptr && !entry->contested &&
                    host.registry.height() - entry->posted_at >= host.dispute)
                    fact.status = PinFact::Status::accepted_final;
            }
        }

        measure_finality();
        for (auto& [id, host] : hosts) result.registry_states[id] = host.registry.serialize();
        result.log_jsonl = events_to_jsonl(result.log);
        return std::move(result);
    }
};

}  // namespace

RunResult Simulation::run() {
    Runner runner(config_);
    return runner.run();
}

}  // namespace aspin::sim
