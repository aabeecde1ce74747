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

#include <cstdint>

#include "aspin/crypto/digest.hpp"
#include "aspin/crypto/keccak.hpp"

namespace aspin {

/// t-th value of the keyed PRF chain: keccak256(seed || t as 8-byte
/// big-endian). One value is consumed per posted (or rolled-over) pin.
Digest256 prf_value(const ChainSecret& secret, std::uint64_t t);

/// MapKey_t = keccak256(PBI || Pin_{t-1} || PRF(t)) over the tightly packed
/// 96-byte concatenation, no length framing.
MapKey derive_map_key(const Pbi& pbi, const Pin& prev_pin, const Digest256& prf_t);

/// Salted identity commitment: keccak256(addr || salt) over 52 bytes.
MaskedId mask_participant(const AccountId& addr, const Digest256& salt);

}  // namespace aspin
