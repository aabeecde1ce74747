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

#include "aspin/harness/verify_log.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "aspin/crypto/derive.hpp"
#include "aspin/harness/scenario.hpp"

namespace aspin::harness {

using nlohmann::json;

namespace {

struct LogPinEntry {
    Pin pin;
    bool contested = false;
};

Digest256 need_digest(const json& j, const char* key) {
    auto d = digest_from_hex(j.at(key).get<std::string>());
    if (!d) throw ScenarioError(std::string("bad hex in log field ") + key);
    return *d;
}

}  // namespace

LogPartition verify_log_text(const std::string& jsonl, const ChainSecret& secret,
                             const Pbi& pbi) {
    std::map<MapKey, LogPinEntry> pin_map;
    // (registry, pbi-hex, proposal id) -> contest target
    std::map<std::tuple<std::string, std::string, std::uint64_t>, MapKey> contest_targets;

    std::istringstream in(jsonl);
    std::string line;
    std::uint64_t total_pins = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ScenarioError(std::string("malformed log line: ") + e.what());
        }
        const std::string type = j.value("event_type", "");
        const json& payload = j.at("payload");
        const std::string registry = payload.value("registry", "");
        if (type == "pin_added") {
            MapKey key{need_digest(payload, "key")};
            pin_map[key] = LogPinEntry{Pin{need_digest(payload, "pin")}, false};
            total_pins += 1;
        } else if (type == "proposal_opened") {
            const json& action = payload.at("action");
            if (action.value("kind", "") == "contest_pin") {
                MapKey target{need_digest(action, "target")};
                contest_targets[{registry, payload.value("pbi", ""),
                                 payload.at("id").get<std::uint64_t>()}] = target;
            }
        } else if (type == "proposal_actioned") {
            if (!payload.at("passed").get<bool>()) continue;
            auto it = contest_targets.find({registry, payload.value("pbi", ""),
                                            payload.at("id").get<std::uint64_t>()});
            if (it == contest_targets.end()) continue;
            auto entry = pin_map.find(it->second);
            if (entry != pin_map.end()) {
                entry->second.contested = true;
                entry->second.pin = contested_sentinel();
            }
        }
    }

    LogPartition out;
    out.total_pins_in_log = total_pins;
    Pin last_good = genesis_pin();
    std::uint64_t ordinal = 0;
    for (std::uint64_t t = 0;; ++t) {
        MapKey key = derive_map_key(pbi, last_good, prf_value(secret, t));
        auto it = pin_map.find(key);
        if (it == pin_map.end()) break;
        VerifiedPin vp;
        vp.prf_index = t;
        vp.ordinal = ordinal;
        vp.key = key;
        vp.pin = it->second.pin;
        vp.contested = it->second.contested;
        out.pins.push_back(vp);
        if (it->second.contested) {
            out.contested += 1;  // burned index; ordinal unchanged
        } else {
            out.accepted += 1;
            last_good = it->second.pin;
            ordinal += 1;
        }
    }
    out.reconstruction_broke = out.pins.empty() && total_pins > 0;
    return out;
}

LogPartition verify_log_file(const std::string& path, const ChainSecret& secret, const Pbi& pbi) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open log file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return verify_log_text(buf.str(), secret, pbi);
}

std::string partition_text(const LogPartition& p) {
    std::ostringstream out;
    for (const auto& vp : p.pins) {
        out << (vp.contested ? "contested" : "pin") << " t=" << vp.prf_index
            << " ordinal=" << vp.ordinal << " key=" << to_hex(vp.key.value);
        if (!vp.contested) out << " value=" << to_hex(vp.pin.value);
        out << "\n";
    }
    out << "accepted: " << p.accepted << ", contested: " << p.contested
        << ", pins in log: " << p.total_pins_in_log << "\n";
    if (p.reconstruction_broke) out << "reconstruction broke: no pins matched this secret\n";
    return out.str();
}

nlohmann::ordered_json partition_json(const LogPartition& p) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json pins = nlohmann::ordered_json::array();
    for (const auto& vp : p.pins) {
        nlohmann::ordered_json e;
        e["prf_index"] = vp.prf_index;
        e["ordinal"] = vp.ordinal;
        e["key"] = to_hex(vp.key.value);
        e["pin"] = to_hex(vp.pin.value);
        e["contested"] = vp.contested;
        pins.push_back(e);
    }
    j["pins"] = pins;
    j["accepted"] = p.accepted;
    j["contested"] = p.contested;
    j["pins_in_log"] = p.total_pins_in_log;
    j["reconstruction_broke"] = p.reconstruction_broke;
    return j;
}

}  // namespace aspin::harness
