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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace aspin {

/// 32-byte value with bytewise total ordering, the common currency for
/// digests, pins, map keys, identifiers and secrets. Ordering keeps map
/// iteration deterministic across runs and platforms.
struct Digest256 {
    std::array<std::uint8_t, 32> bytes{};

    auto operator<=>(const Digest256&) const = default;

    static Digest256 zero() { return Digest256{}; }

    /// Broadcast a single byte into all 32 positions (test markers mostly).
    static Digest256 filled(std::uint8_t b) {
        Digest256 d;
        d.bytes.fill(b);
        return d;
    }

    bool is_zero() const {
        for (auto b : bytes)
            if (b != 0) return false;
        return true;
    }
};

/// 20-byte account identifier (Ethereum address role).
struct AccountId {
    std::array<std::uint8_t, 20> bytes{};

    auto operator<=>(const AccountId&) const = default;

    static AccountId zero() { return AccountId{}; }
};

// Thin strong types around Digest256. They exist so that a Pin cannot be
// passed where a MapKey is expected; all carry the same 32-byte payload.

struct Pin {
    Digest256 value;
    auto operator<=>(const Pin&) const = default;
};

struct MapKey {
    Digest256 value;
    auto operator<=>(const MapKey&) const = default;
};

/// Private Blockchain Identifier. The all-zero value is reserved for the
/// management sidechain and is never a valid private-chain identifier.
struct Pbi {
    Digest256 id;
    auto operator<=>(const Pbi&) const = default;

    static Pbi management() { return Pbi{}; }
    bool is_management() const { return id.is_zero(); }
};

/// Private Blockchain Secret. Seeds the PRF chain; must never appear in any
/// serialized registry state or event log.
struct ChainSecret {
    Digest256 seed;
    auto operator<=>(const ChainSecret&) const = default;
};

/// Salted-hash commitment to an account identity.
struct MaskedId {
    Digest256 commitment;
    auto operator<=>(const MaskedId&) const = default;
};

/// Predecessor of the first pin: the all-zero pin value.
inline Pin genesis_pin() { return Pin{}; }

/// Value written over a successfully contested pin: the 256-bit integer
/// 0xFFFFFFFF, i.e. the low four bytes 0xFF and the rest zero.
inline Pin contested_sentinel() {
    Pin p;
    p.value.bytes[28] = 0xff;
    p.value.bytes[29] = 0xff;
    p.value.bytes[30] = 0xff;
    p.value.bytes[31] = 0xff;
    return p;
}

/// Reserved previous-key value in a contest proof meaning "the contested pin
/// is the first of its chain; use the genesis pin as predecessor".
inline MapKey genesis_prev_key() { return MapKey{}; }

// Hex convention: lowercase, 0x-prefixed, fixed width (64 chars for 32-byte
// values, 40 for account ids).

std::string to_hex(std::span<const std::uint8_t> bytes);
std::string to_hex(const Digest256& d);
std::string to_hex(const AccountId& a);

std::optional<Digest256> digest_from_hex(std::string_view hex);
std::optional<AccountId> account_from_hex(std::string_view hex);

}  // namespace aspin
