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
#include <span>

#include "aspin/analysis/exec.hpp"
#include "aspin/crypto/digest.hpp"

namespace aspin::analysis {

int hamming_distance(const Digest256& a, const Digest256& b);

struct PairStats {
    std::uint64_t pairs = 0;
    std::uint64_t total_distance = 0;
    double mean() const { return pairs == 0 ? 0.0 : double(total_distance) / double(pairs); }
};

/// All unordered pairs within one key set.
PairStats pairwise_within(std::span<const Digest256> keys, ExecMode mode);

/// All pairs across two key sets.
PairStats pairwise_cross(std::span<const Digest256> a, std::span<const Digest256> b,
                         ExecMode mode);

/// Mean per-key Hamming weight (set bits out of 256).
double mean_bit_weight(std::span<const Digest256> keys);

}  // namespace aspin::analysis
