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
#include <string>
#include <vector>

#include <json.hpp>

#include "aspin/crypto/digest.hpp"

namespace aspin::harness {

/// One recovered slot of a chain's pin sequence.
struct VerifiedPin {
    std::uint64_t prf_index = 0;
    std::uint64_t ordinal = 0;  // position in the accepted sequence
    MapKey key;
    Pin pin;
    bool contested = false;
};

struct LogPartition {
    std::vector<VerifiedPin> pins;  // derived walk, contests included
    std::uint64_t accepted = 0;
    std::uint64_t contested = 0;
    std::uint64_t total_pins_in_log = 0;  // pin_added events seen
    /// True when the log holds pins but the derived walk matched none:
    /// either the wrong secret or a broken chain.
    bool reconstruction_broke = false;
};

/// Replays a JSON-lines event log, rebuilds the pin map (including sentinel
/// overwrites from actioned contests), and walks the key chain derivable
/// from (secret, pbi). Only the holder of the right secret partitions out
/// its own pins; anyone else recovers nothing.
LogPartition verify_log_text(const std::string& jsonl, const ChainSecret& secret, const Pbi& pbi);
LogPartition verify_log_file(const std::string& path, const ChainSecret& secret, const Pbi& pbi);

std::string partition_text(const LogPartition& partition);
nlohmann::ordered_json partition_json(const LogPartition& partition);

}  // namespace aspin::harness
