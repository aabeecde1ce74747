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

#include "aspin/sim/chain.hpp"

#include "aspin/crypto/keccak.hpp"

namespace aspin::sim {

Digest256 block_hash(const Digest256& parent_hash, const Digest256& tx_root,
                     std::uint64_t number) {
    Keccak256 h;
    h.update(parent_hash);
    h.update(tx_root);
    h.update_be64(number);
    return h.finalize();
}

const BlockHeader& ChainNode::mint_block(const Digest256& tx_root) {
    BlockHeader header;
    header.number = headers_.size();
    header.parent_hash = headers_.empty() ? Digest256::zero() : headers_.back().hash;
    header.tx_root = tx_root;
    header.hash = block_hash(header.parent_hash, header.tx_root, header.number);
    headers_.push_back(header);
    return headers_.back();
}

Errc ChainNode::revert_chain(std::uint64_t to_height, std::span<const Digest256> new_tx_roots) {
    if (headers_.empty() || to_height >= tip_height()) return Errc::invalid_height;
    headers_.resize(to_height + 1);
    for (const auto& root : new_tx_roots) mint_block(root);
    return Errc::ok;
}

std::uint64_t ChainNode::visible_height() const {
    if (headers_.empty()) return 0;
    if (mode_ == FinalityMode::instant) return tip_height();
    return tip_height() > confirm_depth_ ? tip_height() - confirm_depth_ : 0;
}

}  // namespace aspin::sim
