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

#include "aspin/harness/scenario.hpp"

#include <fstream>
#include <sstream>

#include "aspin/crypto/derive.hpp"

namespace aspin::harness {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ScenarioError(msg); }

const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where + ": missing field '" + key + "'");
    return *it;
}

std::string need_string(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) fail(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::uint64_t need_u64(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_unsigned()) fail(where + ": field '" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

AccountId need_account(const json& j, const char* key, const std::string& where) {
    auto a = account_from_hex(need_string(j, key, where));
    if (!a) fail(where + ": field '" + key + "' must be 20 bytes of hex");
    return *a;
}

Digest256 need_digest(const json& j, const char* key, const std::string& where) {
    auto d = digest_from_hex(need_string(j, key, where));
    if (!d) fail(where + ": field '" + key + "' must be 32 bytes of hex");
    return *d;
}

VotingAlgorithm parse_algorithm(const json& j, const std::string& where) {
    std::string name = j.value("voting_algorithm", "strict-majority");
    if (name == "strict-majority") return VotingAlgorithm::strict_majority;
    fail(where + ": unknown voting algorithm '" + name + "'");
}

sim::ChainConfig parse_chain(const json& j) {
    sim::ChainConfig c;
    c.id = need_string(j, "id", "chain");
    const std::string where = "chain '" + c.id + "'";
    c.ticks_per_block = j.value("ticks_per_block", std::uint64_t{1});
    c.block_period_s = j.value("block_period_s", std::uint64_t{15});
    const json& fin = need(j, "finality", where);
    std::string mode = need_string(fin, "mode", where + ".finality");
    if (mode == "instant") {
        c.mode = sim::FinalityMode::instant;
        c.confirm_depth = 0;
    } else if (mode == "probabilistic") {
        c.mode = sim::FinalityMode::probabilistic;
        c.confirm_depth = need_u64(fin, "confirm_depth", where + ".finality");
    } else {
        fail(where + ": finality.mode must be 'instant' or 'probabilistic'");
    }
    if (j.contains("registry")) {
        const json& r = j.at("registry");
        sim::RegistryHostConfig host;
        host.mgmt_voting.algorithm = parse_algorithm(r, where + ".registry");
        host.mgmt_voting.voting_period = need_u64(r, "voting_period", where + ".registry");
        host.pin_dispute_period = need_u64(r, "pin_dispute_period", where + ".registry");
        const json& admins = need(r, "genesis_admins", where + ".registry");
        if (!admins.is_array() || admins.empty())
            fail(where + ".registry: genesis_admins must be a non-empty array");
        for (const auto& a : admins) {
            auto acct = account_from_hex(a.get<std::string>());
            if (!acct) fail(where + ".registry: bad genesis admin address");
            host.genesis_admins.push_back(*acct);
        }
        c.registry = host;
    }
    if (j.contains("pins_to")) {
        const json& p = j.at("pins_to");
        sim::PinLinkConfig link;
        link.parent = need_string(p, "parent", where + ".pins_to");
        link.pbi = Pbi{need_digest(p, "pbi", where + ".pins_to")};
        link.secret = ChainSecret{need_digest(p, "secret", where + ".pins_to")};
        link.pinning_period = need_u64(p, "pinning_period", where + ".pins_to");
        link.voting.algorithm = parse_algorithm(p, where + ".pins_to");
        link.voting.voting_period = need_u64(p, "voting_period", where + ".pins_to");
        c.pin_link = link;
    }
    return c;
}

sim::ActorConfig parse_actor(const json& j, std::size_t idx) {
    const std::string where = "actor #" + std::to_string(idx);
    sim::ActorConfig a;
    a.account = need_account(j, "account", where);
    a.chain = need_string(j, "chain", where);
    std::string role = j.value("role", "member");
    if (role == "member") a.role = sim::ActorRole::member;
    else if (role == "masked_member") a.role = sim::ActorRole::masked_member;
    else if (role == "quiet_guardian") a.role = sim::ActorRole::quiet_guardian;
    else fail(where + ": unknown role '" + role + "'");
    a.secret_access = j.value("secret_access", false);
    if (j.contains("salt")) a.salt = need_digest(j, "salt", where);
    if (a.role == sim::ActorRole::masked_member && !a.salt)
        fail(where + ": masked_member needs a salt");
    if (j.contains("posts_for"))
        for (const auto& s : j.at("posts_for")) a.posts_for.push_back(s.get<std::string>());
    if (j.contains("watches"))
        for (const auto& s : j.at("watches")) a.watches.push_back(s.get<std::string>());
    a.oppose_contests = j.value("oppose_contests", false);
    return a;
}

sim::ScriptEvent parse_script(const json& j, std::size_t idx) {
    const std::string where = "script #" + std::to_string(idx);
    sim::ScriptEvent s;
    s.tick = need_u64(j, "tick", where);
    std::string kind = need_string(j, "event", where);
    s.chain = need_string(j, "chain", where);
    if (kind == "revert_rewrite") {
        s.kind = sim::ScriptKind::revert_rewrite;
        s.to_height = need_u64(j, "to_height", where);
    } else if (kind == "restore") {
        s.kind = sim::ScriptKind::restore;
    } else if (kind == "false_pin") {
        s.kind = sim::ScriptKind::false_pin;
        s.poster = need_account(j, "poster", where);
    } else if (kind == "squat_next_key") {
        s.kind = sim::ScriptKind::squat_next_key;
        s.poster = need_account(j, "poster", where);
    } else {
        fail(where + ": unknown event '" + kind + "'");
    }
    return s;
}

}  // namespace

Scenario load_scenario_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("scenario is not valid JSON: ") + e.what());
    }
    Scenario sc;
    sc.name = need_string(j, "name", "scenario");
    sc.sim.seed = j.value("seed", std::uint64_t{0});
    sc.sim.duration_ticks = need_u64(j, "duration_ticks", "scenario");
    const json& chains = need(j, "chains", "scenario");
    if (!chains.is_array() || chains.empty()) fail("scenario: chains must be a non-empty array");
    for (const auto& c : chains) sc.sim.chains.push_back(parse_chain(c));
    if (j.contains("actors")) {
        std::size_t i = 0;
        for (const auto& a : j.at("actors")) sc.sim.actors.push_back(parse_actor(a, i++));
    }
    if (j.contains("script")) {
        std::size_t i = 0;
        for (const auto& s : j.at("script")) sc.sim.script.push_back(parse_script(s, i++));
    }
    if (j.contains("expectations")) {
        for (const auto& e : j.at("expectations")) {
            Expectation ex;
            ex.check = need_string(e, "check", "expectation");
            ex.params = e;
            sc.expectations.push_back(ex);
        }
    }
    sim::Simulation probe(sc.sim);
    if (auto err = probe.validate()) fail("scenario: " + *err);
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario_text(buf.str());
}

std::vector<finality::LayerParams> layer_stack(const sim::SimConfig& config,
                                               const std::string& leaf_chain) {
    std::map<std::string, const sim::ChainConfig*> by_id;
    for (const auto& c : config.chains) by_id[c.id] = &c;
    std::vector<finality::LayerParams> layers;
    auto it = by_id.find(leaf_chain);
    if (it == by_id.end()) return layers;
    const sim::ChainConfig* cur = it->second;
    while (cur != nullptr && cur->pin_link) {
        const sim::ChainConfig* parent = by_id.at(cur->pin_link->parent);
        finality::LayerParams layer;
        layer.name = cur->id + "->" + parent->id;
        layer.observe_depth =
            parent->mode == sim::FinalityMode::probabilistic ? parent->confirm_depth : 1;
        layer.unmask_blocks = 1;
        layer.voting_period = cur->pin_link->voting.voting_period;
        layer.action_blocks = 1;
        layer.block_period_s = parent->block_period_s;
        // pinning interval expressed in parent blocks, rounded up
        std::uint64_t interval_s = cur->pin_link->pinning_period * cur->block_period_s;
        layer.pinning_period = (interval_s + parent->block_period_s - 1) / parent->block_period_s;
        layers.push_back(layer);
        cur = parent;
    }
    return layers;
}

namespace {

struct Bound {
    std::optional<std::uint64_t> equals, min, max;

    static Bound from(const json& j) {
        Bound b;
        if (j.contains("equals")) b.equals = j.at("equals").get<std::uint64_t>();
        if (j.contains("min")) b.min = j.at("min").get<std::uint64_t>();
        if (j.contains("max")) b.max = j.at("max").get<std::uint64_t>();
        return b;
    }
    bool ok(std::uint64_t v) const {
        if (equals && v != *equals) return false;
        if (min && v < *min) return false;
        if (max && v > *max) return false;
        return !(!equals && !min && !max);  // an unbounded check is a schema bug
    }
    std::string describe() const {
        std::ostringstream s;
        if (equals) s << " == " << *equals;
        if (min) s << " >= " << *min;
        if (max) s << " <= " << *max;
        return s.str();
    }
};

}  // namespace

RunReport evaluate(const Scenario& scenario, const sim::RunResult& result) {
    RunReport report;
    report.scenario_name = scenario.name;
    for (const auto& ev : result.log) report.event_counts[ev.type]++;
    report.op_counts = result.op_counts;
    report.rejected_counts = result.rejected_counts;
    for (const auto& [chain, ticks] : result.worst_final_age_ticks)
        report.sim_finality_seconds[chain] = ticks * result.seconds_per_tick;
    for (const auto& c : scenario.sim.chains) {
        if (!c.pin_link) continue;
        auto layers = layer_stack(scenario.sim, c.id);
        if (auto model = finality::hierarchy_finality(layers))
            report.model_finality_seconds[c.id] = model->worst_case_seconds;
    }

    auto facts_of = [&](const std::string& chain) -> const std::vector<sim::PinFact>* {
        auto it = result.pin_facts.find(chain);
        return it == result.pin_facts.end() ? nullptr : &it->second;
    };

    for (const auto& ex : scenario.expectations) {
        ExpectationResult r;
        std::ostringstream desc;
        desc << ex.check;
        try {
            if (ex.check == "pin_count" || ex.check == "final_pin_count" ||
                ex.check == "contested_count") {
                std::string chain = need_string(ex.params, "chain", ex.check);
                Bound b = Bound::from(ex.params);
                std::uint64_t n = 0;
                if (const auto* facts = facts_of(chain)) {
                    for (const auto& f : *facts) {
                        if (ex.check == "final_pin_count" &&
                            f.status != sim::PinFact::Status::accepted_final)
                            continue;
                        if (ex.check == "contested_count" &&
                            f.status != sim::PinFact::Status::contested)
                            continue;
                        n += 1;
                    }
                }
                desc << " chain=" << chain << b.describe();
                r.passed = b.ok(n);
                r.detail = "observed " + std::to_string(n);
            } else if (ex.check == "pin_status") {
                std::string chain = need_string(ex.params, "chain", ex.check);
                std::uint64_t prf_index = need_u64(ex.params, "prf_index", ex.check);
                std::string want = need_string(ex.params, "status", ex.check);
                desc << " chain=" << chain << " prf_index=" << prf_index << " status=" << want;
                const auto* facts = facts_of(chain);
                r.passed = false;
                r.detail = "no such pin fact";
                if (facts != nullptr) {
                    for (const auto& f : *facts) {
                        if (f.prf_index != prf_index) continue;
                        std::string got =
                            f.status == sim::PinFact::Status::accepted_final ? "accepted_final"
                            : f.status == sim::PinFact::Status::contested    ? "contested"
                                                                             : "pending";
                        r.passed = got == want;
                        r.detail = "observed " + got;
                        break;
                    }
                }
            } else if (ex.check == "rollover_recovered") {
                std::string chain = need_string(ex.params, "chain", ex.check);
                desc << " chain=" << chain;
                r.passed = false;
                r.detail = "no contested pin with a recovered successor";
                const auto* facts = facts_of(chain);
                const sim::ChainConfig* ccfg = nullptr;
                for (const auto& c : scenario.sim.chains)
                    if (c.id == chain) ccfg = &c;
                if (facts != nullptr && ccfg != nullptr && ccfg->pin_link) {
                    const auto& link = *ccfg->pin_link;
                    Pin last_accepted = genesis_pin();
                    for (std::size_t i = 0; i < facts->size(); ++i) {
                        const auto& f = (*facts)[i];
                        if (f.status == sim::PinFact::Status::contested) {
                            // independent re-derivation of the rollover key
                            MapKey expected = derive_map_key(
                                link.pbi, last_accepted, prf_value(link.secret, f.prf_index + 1));
                            for (std::size_t k = i + 1; k < facts->size(); ++k) {
                                const auto& g = (*facts)[k];
                                if (g.ordinal != f.ordinal) continue;
                                if (g.status == sim::PinFact::Status::contested) continue;
                                if (g.prf_index == f.prf_index + 1 && g.key == expected) {
                                    r.passed = true;
                                    r.detail = "rollover key matched re-derivation";
                                }
                                break;
                            }
                        } else if (f.status == sim::PinFact::Status::accepted_final) {
                            last_accepted = f.pin;
                        }
                        if (r.passed) break;
                    }
                }
            } else if (ex.check == "no_contest_proposals") {
                std::uint64_t n = 0;
                for (const auto& ev : result.log)
                    if (ev.type == "proposal_opened" &&
                        ev.payload.contains("action") &&
                        ev.payload.at("action").value("kind", "") == "contest_pin")
                        n += 1;
                r.passed = n == 0;
                r.detail = "observed " + std::to_string(n);
            } else if (ex.check == "contest_outcome") {
                std::string want = need_string(ex.params, "outcome", ex.check);
                Bound b = Bound::from(ex.params);
                desc << " outcome=" << want << b.describe();
                // map (registry, pbi, id) -> is contest
                std::map<std::tuple<std::string, std::string, std::uint64_t>, bool> is_contest;
                for (const auto& ev : result.log) {
                    if (ev.type != "proposal_opened") continue;
                    is_contest[{ev.payload.value("registry", ""), ev.payload.value("pbi", ""),
                                ev.payload.at("id").get<std::uint64_t>()}] =
                        ev.payload.at("action").value("kind", "") == "contest_pin";
                }
                std::uint64_t n = 0;
                for (const auto& ev : result.log) {
                    if (ev.type != "proposal_actioned") continue;
                    auto key = std::tuple{ev.payload.value("registry", ""),
                                          ev.payload.value("pbi", ""),
                                          ev.payload.at("id").get<std::uint64_t>()};
                    if (!is_contest[key]) continue;
                    bool passed = ev.payload.at("passed").get<bool>();
                    if ((want == "passed") == passed) n += 1;
                }
                r.passed = b.ok(n);
                r.detail = "observed " + std::to_string(n);
            } else if (ex.check == "event_count") {
                std::string type = need_string(ex.params, "type", ex.check);
                Bound b = Bound::from(ex.params);
                desc << " type=" << type << b.describe();
                std::uint64_t n = report.event_counts.count(type) ? report.event_counts[type] : 0;
                r.passed = b.ok(n);
                r.detail = "observed " + std::to_string(n);
            } else {
                r.passed = false;
                r.detail = "unknown check";
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("expectation error: ") + e.what();
        }
        r.description = desc.str();
        report.all_passed = report.all_passed && r.passed;
        report.expectations.push_back(std::move(r));
    }
    return report;
}

std::string report_text(const RunReport& report) {
    std::ostringstream out;
    out << "scenario: " << report.scenario_name << "\n";
    for (const auto& r : report.expectations)
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.description << " (" << r.detail << ")\n";
    out << "event counts:\n";
    for (const auto& [type, n] : report.event_counts) out << "  " << type << ": " << n << "\n";
    out << "operation counts:\n";
    for (const auto& [host, rows] : report.op_counts) {
        out << "  registry " << host << ":\n";
        for (const auto& [row, n] : rows) out << "    " << row << ": " << n << "\n";
    }
    if (!report.rejected_counts.empty()) {
        out << "rejected operations:\n";
        for (const auto& [err, n] : report.rejected_counts) out << "  " << err << ": " << n << "\n";
    }
    for (const auto& [chain, s] : report.sim_finality_seconds) {
        out << "finality " << chain << ": simulated worst case " << s << " s";
        auto it = report.model_finality_seconds.find(chain);
        if (it != report.model_finality_seconds.end()) out << ", model worst case " << it->second << " s";
        out << "\n";
    }
    out << "result: " << (report.all_passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

nlohmann::ordered_json report_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario_name;
    j["all_passed"] = report.all_passed;
    nlohmann::ordered_json ex = nlohmann::ordered_json::array();
    for (const auto& r : report.expectations) {
        nlohmann::ordered_json e;
        e["description"] = r.description;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        ex.push_back(e);
    }
    j["expectations"] = ex;
    j["event_counts"] = report.event_counts;
    j["op_counts"] = report.op_counts;
    j["rejected_counts"] = report.rejected_counts;
    j["sim_finality_seconds"] = report.sim_finality_seconds;
    j["model_finality_seconds"] = report.model_finality_seconds;
    return j;
}

}  // namespace aspin::harness
