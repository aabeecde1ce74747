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

#include <doctest.h>

#include <vector>

#include "aspin/analysis/avalanche.hpp"
#include "aspin/analysis/hamming.hpp"
#include "aspin/analysis/seed_search.hpp"
#include "aspin/crypto/derive.hpp"

using namespace aspin;
using namespace aspin::analysis;

TEST_CASE("hamming distance basics") {
    Digest256 a = Digest256::zero();
    Digest256 b = Digest256::zero();
    CHECK(hamming_distance(a, b) == 0);
    b.bytes[0] = 0x01;
    CHECK(hamming_distance(a, b) == 1);
    b.bytes[31] = 0xff;
    CHECK(hamming_distance(a, b) == 9);
    CHECK(hamming_distance(Digest256::filled(0xff), Digest256::zero()) == 256);
}

TEST_CASE("serial and parallel kernels agree exactly") {
    ChainSecret s{Digest256::filled(0x5a)};
    std::vector<Digest256> keys;
    for (std::uint64_t i = 0; i < 300; ++i) keys.push_back(prf_value(s, i));
    std::vector<Digest256> other;
    for (std::uint64_t i = 0; i < 211; ++i)
        other.push_back(prf_value(ChainSecret{Digest256::filled(0x5b)}, i));

    SUBCASE("pairwise within") {
        auto a = pairwise_within(keys, ExecMode::serial);
        auto b = pairwise_within(keys, ExecMode::parallel);
        CHECK(a.pairs == b.pairs);
        CHECK(a.total_distance == b.total_distance);
        CHECK(a.pairs == 300u * 299u / 2u);
    }
    SUBCASE("pairwise cross") {
        auto a = pairwise_cross(keys, other, ExecMode::serial);
        auto b = pairwise_cross(keys, other, ExecMode::parallel);
        CHECK(a.pairs == b.pairs);
        CHECK(a.total_distance == b.total_distance);
        CHECK(a.pairs == 300u * 211u);
    }
    SUBCASE("avalanche") {
        auto a = keccak_avalanche(96, 4000, 77, ExecMode::serial);
        auto b = keccak_avalanche(96, 4000, 77, ExecMode::parallel);
        CHECK(a.total_bits == b.total_bits);
        CHECK(a.total_bits_sq == b.total_bits_sq);
        CHECK(a.min_bits == b.min_bits);
        CHECK(a.max_bits == b.max_bits);
    }
    SUBCASE("seed search") {
        ChainSecret truth = truncated_secret(0x4bd2);
        ContestObservation obs;
        obs.pbi = Pbi{Digest256::filled(0x22)};
        obs.prev_pin = Pin{Digest256::filled(0x09)};
        obs.t = 4;
        obs.prf_t = prf_value(truth, obs.t);
        obs.prev_key = MapKey{Digest256::filled(0x01)};
        obs.target_key = derive_map_key(obs.pbi, obs.prev_pin, obs.prf_t);
        auto a = truncated_seed_search(obs, 16, ExecMode::serial);
        auto b = truncated_seed_search(obs, 16, ExecMode::parallel);
        CHECK(a.found == b.found);
        CHECK(a.seed == b.seed);
        CHECK(a.steps == b.steps);
        CHECK(random_seed_search(obs, 20000, 5, ExecMode::serial) ==
              random_seed_search(obs, 20000, 5, ExecMode::parallel));
    }
}

TEST_CASE("edge shapes") {
    std::vector<Digest256> none;
    CHECK(pairwise_within(none, ExecMode::serial).pairs == 0);
    std::vector<Digest256> one{Digest256::filled(1)};
    CHECK(pairwise_within(one, ExecMode::parallel).pairs == 0);
    CHECK(pairwise_cross(one, none, ExecMode::serial).pairs == 0);
    CHECK(mean_bit_weight(none) == 0.0);
    CHECK(mean_bit_weight(one) == 32.0);  // 0x01 repeated: one bit per byte
}

TEST_CASE("truncated seed search walks the whole prefix of the space") {
    ChainSecret truth = truncated_secret(0x00c7);
    ContestObservation obs;
    obs.pbi = Pbi{Digest256::filled(0x22)};
    obs.prev_pin = Pin{Digest256::filled(0x01)};
    obs.t = 2;
    obs.prf_t = prf_value(truth, obs.t);
    obs.target_key = derive_map_key(obs.pbi, obs.prev_pin, obs.prf_t);

    auto r = truncated_seed_search(obs, 16, ExecMode::serial);
    REQUIRE(r.found);
    CHECK(r.seed == 0x00c7);
    CHECK(r.steps == 0x00c7 + 1);  // nothing short of enumeration reaches it

    // the recovered seed reproduces both the next and the replacement key
    ChainSecret recovered = truncated_secret(r.seed);
    CHECK(prf_value(recovered, obs.t + 1) == prf_value(truth, obs.t + 1));
}

TEST_CASE("random full-width seeds never explain an observation") {
    ChainSecret truth{Digest256::filled(0x61)};
    ContestObservation obs;
    obs.pbi = Pbi{Digest256::filled(0x22)};
    obs.prev_pin = Pin{Digest256::filled(0x02)};
    obs.t = 12;
    obs.prf_t = prf_value(truth, obs.t);
    obs.target_key = derive_map_key(obs.pbi, obs.prev_pin, obs.prf_t);
    CHECK(random_seed_search(obs, 10000, 99, ExecMode::parallel) == 0);
}
