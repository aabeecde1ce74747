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

#include "aspin/crypto/derive.hpp"

namespace aspin {

Digest256 prf_value(const ChainSecret& secret, std::uint64_t t) {
    Keccak256 h;
    h.update(secret.seed);
    h.update_be64(t);
    return h.finalize();
}

MapKey derive_map_key(const Pbi& pbi, const Pin& prev_pin, const Digest256& prf_t) {
    Keccak256 h;
    h.update(pbi.id);
    h.update(prev_pin.value);
    h.update(prf_t);
    return MapKey{h.finalize()};
}

MaskedId mask_participant(const AccountId& addr, const Digest256& salt) {
    Keccak256 h;
    h.update(addr);
    h.update(salt);
    return MaskedId{h.finalize()};
}

}  // namespace aspin
