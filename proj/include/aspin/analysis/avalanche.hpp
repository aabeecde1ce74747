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

#include <cmath>
#include <cstdint>

#include "aspin/analysis/exec.hpp"
#include "aspin/crypto/digest.hpp"

namespace aspin::analysis {

struct AvalancheStats {
    std::uint64_t trials = 0;
    std::uint64_t total_bits = 0;
    std::uint64_t total_bits_sq = 0;
    int min_bits = 256;
    int max_bits = 0;

    double mean() const { return trials == 0 ? 0.0 : double(total_bits) / double(trials); }
    double stddev() const {
        if (trials == 0) return 0.0;
        double m = mean();
        return std::sqrt(double(total_bits_sq) / double(trials) - m * m);
    }
};

/// Single-bit diffusion of keccak256 over `input_len`-byte messages: per
/// trial, a pseudorandom message and bit position are derived from (seed,
/// trial index), the bit is flipped, and the digest Hamming distance is
/// accumulated. Trial-indexed randomness keeps serial and parallel runs
/// identical. input_len = 96 exercises the exact map-key derivation shape.
AvalancheStats keccak_avalanche(std::size_t input_len, std::uint64_t trials, std::uint64_t seed,
                                ExecMode mode);

}  // namespace aspin::analysis
