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

#include "aspin/crypto/digest.hpp"

namespace aspin {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// Accepts an optional 0x prefix; requires exactly `n` bytes of hex.
bool parse_fixed_hex(std::string_view hex, std::uint8_t* out, std::size_t n) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    if (hex.size() != n * 2) return false;
    for (std::size_t i = 0; i < n; ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) return false;
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return true;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
    std::string s;
    s.reserve(2 + bytes.size() * 2);
    s += "0x";
    for (auto b : bytes) {
        s += kHexDigits[b >> 4];
        s += kHexDigits[b & 0x0f];
    }
    return s;
}

std::string to_hex(const Digest256& d) { return to_hex(std::span(d.bytes)); }

std::string to_hex(const AccountId& a) { return to_hex(std::span(a.bytes)); }

std::optional<Digest256> digest_from_hex(std::string_view hex) {
    Digest256 d;
    if (!parse_fixed_hex(hex, d.bytes.data(), d.bytes.size())) return std::nullopt;
    return d;
}

std::optional<AccountId> account_from_hex(std::string_view hex) {
    AccountId a;
    if (!parse_fixed_hex(hex, a.bytes.data(), a.bytes.size())) return std::nullopt;
    return a;
}

}  // namespace aspin
