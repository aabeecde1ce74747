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

#include "aspin/analysis/hamming.hpp"

#include <bit>
#include <cstring>

namespace aspin::analysis {

int hamming_distance(const Digest256& a, const Digest256& b) {
    int bits = 0;
    for (int i = 0; i < 4; ++i) {
        std::uint64_t wa, wb;
        std::memcpy(&wa, a.bytes.data() + i * 8, 8);
        std::memcpy(&wb, b.bytes.data() + i * 8, 8);
        bits += std::popcount(wa ^ wb);
    }
    return bits;
}

PairStats pairwise_within(std::span<const Digest256> keys, ExecMode mode) {
    const std::int64_t n = static_cast<std::int64_t>(keys.size());
    std::uint64_t total = 0;
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = i + 1; j < n; ++j)
                total += static_cast<std::uint64_t>(hamming_distance(keys[i], keys[j]));
    } else {
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = i + 1; j < n; ++j)
                total += static_cast<std::uint64_t>(hamming_distance(keys[i], keys[j]));
    }
    PairStats stats;
    stats.pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    stats.total_distance = total;
    return stats;
}

PairStats pairwise_cross(std::span<const Digest256> a, std::span<const Digest256> b,
                         ExecMode mode) {
    const std::int64_t na = static_cast<std::int64_t>(a.size());
    const std::int64_t nb = static_cast<std::int64_t>(b.size());
    std::uint64_t total = 0;
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : total)
        for (std::int64_t i = 0; i < na; ++i)
            for (std::int64_t j = 0; j < nb; ++j)
                total += static_cast<std::uint64_t>(hamming_distance(a[i], b[j]));
    } else {
        for (std::int64_t i = 0; i < na; ++i)
            for (std::int64_t j = 0; j < nb; ++j)
                total += static_cast<std::uint64_t>(hamming_distance(a[i], b[j]));
    }
    PairStats stats;
    stats.pairs = static_cast<std::uint64_t>(na) * static_cast<std::uint64_t>(nb);
    stats.total_distance = total;
    return stats;
}

double mean_bit_weight(std::span<const Digest256> keys) {
    if (keys.empty()) return 0.0;
    std::uint64_t total = 0;
    const Digest256 zero{};
    for (const auto& k : keys) total += static_cast<std::uint64_t>(hamming_distance(k, zero));
    return double(total) / double(keys.size());
}

}  // namespace aspin::analysis
