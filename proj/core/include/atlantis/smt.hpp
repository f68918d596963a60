// Copyright 2026 The Atlantis Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "atlantis/commitment.hpp"

namespace atlantis {

// Tree digests are field elements so the whole protocol keeps one hash
// primitive.
using Digest = Scalar;

struct MerkleProof {
    std::uint32_t leafIndex = 0;
    std::vector<Digest> siblings; // leaf-to-root order, one per level

    bool operator==(const MerkleProof&) const = default;
};

// Fixed-depth sparse Merkle tree over commitments addressed by
// index = hash(C) truncated to `depth` bits. Append-only: spent status is
// tracked by nullifiers, never by removal. Index collisions are rejected;
// the spender retries with a fresh output key.
class SparseMerkleTree {
  public:
    static constexpr std::uint8_t kDefaultDepth = 32;
    static constexpr std::uint8_t kMaxDepth = 32;

    explicit SparseMerkleTree(std::uint8_t depth = kDefaultDepth);

    [[nodiscard]] std::uint8_t depth() const { return depth_; }
    [[nodiscard]] const Digest& root() const { return root_; }
    [[nodiscard]] std::size_t leafCount() const { return leaves_.size(); }
    [[nodiscard]] bool occupied(std::uint32_t index) const { return leaves_.contains(index); }
    [[nodiscard]] const std::map<std::uint32_t, Digest>& leaves() const { return leaves_; }

    static std::uint32_t leafIndexFor(const Commitment& c, std::uint8_t depth);
    static Digest leafDigestFor(const Commitment& c);
    [[nodiscard]] std::uint32_t leafIndex(const Commitment& c) const {
        return leafIndexFor(c, depth_);
    }

    // Returns the new root. Throws IndexCollision if the slot is occupied.
    Digest insert(const Commitment& c);
    // Rebuild path for a persisted leaf digest (state-file load).
    Digest insertLeafDigest(std::uint32_t index, const Digest& leaf);

    // Throws NotFound unless C occupies its derived slot.
    [[nodiscard]] MerkleProof proveMembership(const Commitment& c) const;

    static bool verifyMembership(const Commitment& c, const MerkleProof& proof, const Digest& root,
                                 std::uint8_t depth);

    // Recompute the root from the leaves alone; used to validate persisted
    // state and in tests against the incrementally maintained root.
    [[nodiscard]] Digest recomputeRoot() const;

  private:
    [[nodiscard]] Digest nodeAt(std::uint8_t level, std::uint32_t index) const;

    std::uint8_t depth_;
    std::vector<Digest> defaults_; // defaults_[level] = digest of empty subtree
    std::map<std::uint32_t, Digest> leaves_;
    // Occupied internal nodes, keyed by (level << 32) | index.
    std::unordered_map<std::uint64_t, Digest> nodes_;
    Digest root_;
};

} // namespace atlantis
