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

// Serial-vs-OpenMP timing for the analysis kernels. Each kernel is run in
// both modes on the same inputs; results are checked for equality before a
// timing is reported.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aspin/analysis/avalanche.hpp"
#include "aspin/analysis/hamming.hpp"
#include "aspin/analysis/seed_search.hpp"
#include "aspin/crypto/derive.hpp"

using namespace aspin;
using namespace aspin::analysis;

namespace {

double seconds_of(const std::chrono::steady_clock::time_point& a,
                  const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return seconds_of(t0, t1);
}

void row(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx %s\n", name, serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0, equal ? "" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel mode runs serially\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        constexpr std::uint64_t trials = 200000;
        AvalancheStats a, b;
        double ts = timed([&] { a = keccak_avalanche(96, trials, 42, ExecMode::serial); });
        double tp = timed([&] { b = keccak_avalanche(96, trials, 42, ExecMode::parallel); });
        row("avalanche 96B x200k", ts, tp,
            a.total_bits == b.total_bits && a.total_bits_sq == b.total_bits_sq &&
                a.min_bits == b.min_bits && a.max_bits == b.max_bits);
    }
    {
        ChainSecret s{Digest256::filled(0x5a)};
        std::vector<Digest256> keys;
        for (std::uint64_t i = 0; i < 4000; ++i) keys.push_back(prf_value(s, i));
        PairStats a, b;
        double ts = timed([&] { a = pairwise_within(keys, ExecMode::serial); });
        double tp = timed([&] { b = pairwise_within(keys, ExecMode::parallel); });
        row("pairwise hamming 4k keys", ts, tp,
            a.pairs == b.pairs && a.total_distance == b.total_distance);
    }
    {
        ChainSecret truth = truncated_secret(0xbeef);
        Pbi pbi{Digest256::filled(0x22)};
        ContestObservation obs;
        obs.pbi = pbi;
        obs.prev_pin = Pin{Digest256::filled(0x01)};
        obs.t = 3;
        obs.prf_t = prf_value(truth, obs.t);
        obs.target_key = derive_map_key(pbi, obs.prev_pin, obs.prf_t);
        TruncatedSearchResult a, b;
        double ts = timed([&] { a = truncated_seed_search(obs, 22, ExecMode::serial); });
        double tp = timed([&] { b = truncated_seed_search(obs, 22, ExecMode::parallel); });
        row("seed search 2^22", ts, tp, a.found == b.found && a.seed == b.seed);
    }
    {
        ChainSecret truth{Digest256::filled(0x77)};
        Pbi pbi{Digest256::filled(0x22)};
        ContestObservation obs;
        obs.pbi = pbi;
        obs.prev_pin = Pin{Digest256::filled(0x01)};
        obs.t = 9;
        obs.prf_t = prf_value(truth, obs.t);
        obs.target_key = derive_map_key(pbi, obs.prev_pin, obs.prf_t);
        std::uint64_t a = 0, b = 0;
        double ts = timed([&] { a = random_seed_search(obs, 2000000, 7, ExecMode::serial); });
        double tp = timed([&] { b = random_seed_search(obs, 2000000, 7, ExecMode::parallel); });
        row("random seed search 2M", ts, tp, a == b);
    }
    return 0;
}
