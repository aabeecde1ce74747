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

#include "aspin/analysis/seed_search.hpp"

#include <algorithm>

#include "aspin/crypto/derive.hpp"
#include "aspin/crypto/keccak.hpp"

namespace aspin::analysis {

ChainSecret truncated_secret(std::uint64_t value) {
    ChainSecret s;
    for (int i = 0; i < 8; ++i)
        s.seed.bytes[24 + i] = static_cast<std::uint8_t>(value >> (56 - 8 * i));
    return s;
}

namespace {

bool consistent(const ContestObservation& obs, const ChainSecret& candidate) {
    // A candidate seed "explains" the observation when its PRF chain produces
    // the revealed PRF value at index t (and therefore the target key).
    return prf_value(candidate, obs.t) == obs.prf_t;
}

}  // namespace

TruncatedSearchResult truncated_seed_search(const ContestObservation& obs, unsigned bits,
                                            ExecMode mode) {
    const std::int64_t space = std::int64_t(1) << bits;
    std::int64_t first_match = space;  // enumeration position of first hit
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static) reduction(min : first_match)
        for (std::int64_t v = 0; v < space; ++v) {
            if (consistent(obs, truncated_secret(static_cast<std::uint64_t>(v))))
                first_match = std::min(first_match, v);
        }
    } else {
        for (std::int64_t v = 0; v < space; ++v) {
            if (consistent(obs, truncated_secret(static_cast<std::uint64_t>(v)))) {
                first_match = v;
                break;
            }
        }
    }
    TruncatedSearchResult r;
    if (first_match < space) {
        r.found = true;
        r.seed = static_cast<std::uint64_t>(first_match);
        r.steps = static_cast<std::uint64_t>(first_match) + 1;
    } else {
        r.steps = static_cast<std::uint64_t>(space);
    }
    return r;
}

std::uint64_t random_seed_search(const ContestObservation& obs, std::uint64_t trials,
                                 std::uint64_t rng_seed, ExecMode mode) {
    const std::int64_t n = static_cast<std::int64_t>(trials);
    std::uint64_t hits = 0;
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : hits)
        for (std::int64_t i = 0; i < n; ++i) {
            Keccak256 h;
            h.update_be64(rng_seed);
            h.update_be64(static_cast<std::uint64_t>(i));
            ChainSecret candidate{h.finalize()};
            if (consistent(obs, candidate)) hits += 1;
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            Keccak256 h;
            h.update_be64(rng_seed);
            h.update_be64(static_cast<std::uint64_t>(i));
            ChainSecret candidate{h.finalize()};
            if (consistent(obs, candidate)) hits += 1;
        }
    }
    return hits;
}

}  // namespace aspin::analysis
