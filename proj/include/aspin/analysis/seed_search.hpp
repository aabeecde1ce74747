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

#include "aspin/analysis/exec.hpp"
#include "aspin/crypto/digest.hpp"

namespace aspin::analysis {

/// What an observer of a contested pin learns from the chain: both map keys,
/// the revealed PRF value, the previous pin, the (public) PBI, and the index
/// t of the contested slot.
struct ContestObservation {
    Pbi pbi;
    Pin prev_pin;
    Digest256 prf_t;
    MapKey prev_key;
    MapKey target_key;
    std::uint64_t t = 0;
};

/// Embeds a small integer seed into a ChainSecret (big-endian in the last
/// eight bytes, rest zero) for the truncated-seed attacker model.
ChainSecret truncated_secret(std::uint64_t value);

struct TruncatedSearchResult {
    bool found = false;
    std::uint64_t seed = 0;
    /// PRF evaluations performed before (and including) the first consistent
    /// candidate in enumeration order 0,1,2,...; with no shortcut available
    /// this equals the seed's position + 1.
    std::uint64_t steps = 0;
};

/// Enumerates the full 2^bits truncated-seed space looking for a seed whose
/// PRF chain reproduces the observation. Both modes report steps as the
/// enumeration-order position of the first match.
TruncatedSearchResult truncated_seed_search(const ContestObservation& obs, unsigned bits,
                                            ExecMode mode);

/// Random search over full 256-bit seeds; returns how many of `trials`
/// candidates reproduce the observation (expected: zero).
std::uint64_t random_seed_search(const ContestObservation& obs, std::uint64_t trials,
                                 std::uint64_t rng_seed, ExecMode mode);

}  // namespace aspin::analysis
