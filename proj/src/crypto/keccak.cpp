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

#include "aspin/crypto/keccak.hpp"

#include <cstring>

namespace aspin {

namespace {

constexpr std::uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr int kRotations[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};

constexpr int kPiLane[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                             15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

inline std::uint64_t rotl64(std::uint64_t x, int n) {
    return (x << n) | (x >> (64 - n));
}

void keccak_f1600(std::uint64_t st[25]) {
    std::uint64_t bc[5];
    for (int round = 0; round < 24; ++round) {
        // theta
        for (int i = 0; i < 5; ++i)
            bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
        for (int i = 0; i < 5; ++i) {
            std::uint64_t t = bc[(i + 4) % 5] ^ rotl64(bc[(i + 1) % 5], 1);
            for (int j = 0; j < 25; j += 5) st[j + i] ^= t;
        }
        // rho + pi
        std::uint64_t t = st[1];
        for (int i = 0; i < 24; ++i) {
            int j = kPiLane[i];
            bc[0] = st[j];
            st[j] = rotl64(t, kRotations[i]);
            t = bc[0];
        }
        // chi
        for (int j = 0; j < 25; j += 5) {
            for (int i = 0; i < 5; ++i) bc[i] = st[j + i];
            for (int i = 0; i < 5; ++i)
                st[j + i] ^= (~bc[(i + 1) % 5]) & bc[(i + 2) % 5];
        }
        // iota
        st[0] ^= kRoundConstants[round];
    }
}

}  // namespace

void Keccak256::absorb_block() {
    for (std::size_t i = 0; i < kRate / 8; ++i) {
        std::uint64_t lane = 0;
        for (int j = 0; j < 8; ++j)
            lane |= static_cast<std::uint64_t>(buffer_[i * 8 + j]) << (8 * j);
        state_[i] ^= lane;
    }
    keccak_f1600(state_);
    pos_ = 0;
}

Keccak256& Keccak256::update(std::span<const std::uint8_t> data) {
    const std::uint8_t* p = data.data();
    std::size_t len = data.size();
    while (len > 0) {
        std::size_t take = kRate - pos_;
        if (take > len) take = len;
        std::memcpy(buffer_ + pos_, p, take);
        pos_ += take;
        p += take;
        len -= take;
        if (pos_ == kRate) absorb_block();
    }
    return *this;
}

Keccak256& Keccak256::update_be64(std::uint64_t v) {
    std::uint8_t be[8];
    for (int i = 0; i < 8; ++i) be[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
    return update(std::span<const std::uint8_t>(be, 8));
}

Digest256 Keccak256::finalize() {
    // Original Keccak pad10*1: domain byte 0x01, final bit 0x80.
    std::memset(buffer_ + pos_, 0, kRate - pos_);
    buffer_[pos_] = 0x01;
    buffer_[kRate - 1] |= 0x80;
    pos_ = kRate;
    absorb_block();

    Digest256 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j)
            out.bytes[i * 8 + j] = static_cast<std::uint8_t>(state_[i] >> (8 * j));
    return out;
}

Digest256 keccak256(std::span<const std::uint8_t> data) {
    Keccak256 h;
    h.update(data);
    return h.finalize();
}

Digest256 keccak256(std::string_view data) {
    return keccak256(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

}  // namespace aspin
