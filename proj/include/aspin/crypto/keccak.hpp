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

#include <cstddef>
#include <cstdint>
#include <span>

#include "aspin/crypto/digest.hpp"

namespace aspin {

/// Incremental KECCAK-256 with the original Keccak padding (domain byte
/// 0x01), i.e. the Ethereum variant, not FIPS-202 SHA3-256.
class Keccak256 {
  public:
    Keccak256() = default;

    Keccak256& update(std::span<const std::uint8_t> data);
    Keccak256& update(const Digest256& d) { return update(std::span(d.bytes)); }
    Keccak256& update(const AccountId& a) { return update(std::span(a.bytes)); }

    /// Absorbs an 8-byte big-endian integer.
    Keccak256& update_be64(std::uint64_t v);

    Digest256 finalize();

  private:
    void absorb_block();

    static constexpr std::size_t kRate = 136;  // (1600 - 2*256) / 8

    std::uint64_t state_[25] = {};
    std::uint8_t buffer_[kRate] = {};
    std::size_t pos_ = 0;
};

/// One-shot KECCAK-256 of a byte sequence (empty input allowed).
Digest256 keccak256(std::span<const std::uint8_t> data);

/// Convenience overload for string data in tests and tools.
Digest256 keccak256(std::string_view data);

}  // namespace aspin
