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

#include "aspin/analysis/avalanche.hpp"

#include <algorithm>
#include <vector>

#include "aspin/analysis/hamming.hpp"
#include "aspin/crypto/keccak.hpp"

namespace aspin::analysis {

namespace {

// splitmix64; trial-indexed so iteration order never matters
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int one_trial(std::size_t input_len, std::uint64_t seed, std::uint64_t trial) {
    std::vector<std::uint8_t> msg(input_len);
    std::uint64_t s = mix64(seed ^ mix64(trial));
    for (std::size_t i = 0; i < input_len; ++i) {
        if (i % 8 == 0) s = mix64(s);
        msg[i] = static_cast<std::uint8_t>(s >> ((i % 8) * 8));
    }
    std::uint64_t bit = input_len == 0 ? 0 : mix64(s + 1) % (input_len * 8);
    Digest256 before = keccak256(std::span<const std::uint8_t>(msg));
    msg[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    Digest256 after = keccak256(std::span<const std::uint8_t>(msg));
    return hamming_distance(before, after);
}

}  // namespace

AvalancheStats keccak_avalanche(std::size_t input_len, std::uint64_t trials, std::uint64_t seed,
                                ExecMode mode) {
    const std::int64_t n = static_cast<std::int64_t>(trials);
    std::uint64_t total = 0, total_sq = 0;
    int min_bits = 256, max_bits = 0;
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : total, total_sq) \
    reduction(min : min_bits) reduction(max : max_bits)
        for (std::int64_t i = 0; i < n; ++i) {
            int d = one_trial(input_len, seed, static_cast<std::uint64_t>(i));
            total += static_cast<std::uint64_t>(d);
            total_sq += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
            min_bits = std::min(min_bits, d);
            max_bits = std::max(max_bits, d);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            int d = one_trial(input_len, seed, static_cast<std::uint64_t>(i));
            total += static_cast<std::uint64_t>(d);
            total_sq += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
            min_bits = std::min(min_bits, d);
            max_bits = std::max(max_bits, d);
        }
    }
    AvalancheStats stats;
    stats.trials = trials;
    stats.total_bits = total;
    stats.total_bits_sq = total_sq;
    stats.min_bits = min_bits;
    stats.max_bits = max_bits;
    return stats;
}

}  // namespace aspin::analysis
