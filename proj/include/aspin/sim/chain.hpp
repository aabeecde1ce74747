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
#include <span>
#include <string>
#include <vector>

#include "aspin/crypto/digest.hpp"
#include "aspin/registry/errors.hpp"

namespace aspin::sim {

struct BlockHeader {
    std::uint64_t number = 0;
    Digest256 parent_hash;
    Digest256 tx_root;
    Digest256 hash;
};

/// hash = keccak256(parent_hash || tx_root || number as 8-byte big-endian).
Digest256 block_hash(const Digest256& parent_hash, const Digest256& tx_root, std::uint64_t number);

enum class FinalityMode { probabilistic, instant };

/// A simulated blockchain: a hash-linked header sequence with a block clock.
/// Reverting and re-minting models the collusion attack the pinning protocol
/// defends against.
class ChainNode {
  public:
    ChainNode() = default;
    ChainNode(std::string chain_id, std::uint64_t block_period_s, FinalityMode mode,
              std::uint64_t confirm_depth)
        : chain_id_(std::move(chain_id)),
          block_period_s_(block_period_s),
          mode_(mode),
          confirm_depth_(mode == FinalityMode::instant ? 0 : confirm_depth) {}

    const BlockHeader& mint_block(const Digest256& tx_root);

    /// Truncates the chain to `to_height` and re-mints one block per entry in
    /// new_tx_roots on top. Requires to_height < tip height.
    Errc revert_chain(std::uint64_t to_height, std::span<const Digest256> new_tx_roots);

    /// Height at which reads are trusted: tip minus confirm depth (floored at
    /// zero) under probabilistic finality, the tip itself under instant.
    std::uint64_t visible_height() const;

    bool empty() const { return headers_.empty(); }
    std::uint64_t tip_height() const { return headers_.back().number; }
    const BlockHeader& tip() const { return headers_.back(); }
    const BlockHeader& header(std::uint64_t number) const { return headers_.at(number); }
    bool has_height(std::uint64_t number) const { return number < headers_.size(); }

    const std::string& id() const { return chain_id_; }
    std::uint64_t block_period_s() const { return block_period_s_; }
    FinalityMode mode() const { return mode_; }
    std::uint64_t confirm_depth() const { return confirm_depth_; }

  private:
    std::string chain_id_;
    std::uint64_t block_period_s_ = 15;
    FinalityMode mode_ = FinalityMode::instant;
    std::uint64_t confirm_depth_ = 0;
    std::vector<BlockHeader> headers_;
};

}  // namespace aspin::sim
