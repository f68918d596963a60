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

#include "atlantis/smt.hpp"

#include "atlantis/errors.hpp"

namespace atlantis {

namespace {

constexpr char kLeafIndexTag[] = "atlantis/leaf";
constexpr char kLeafValueTag[] = "atlantis/leafval";
constexpr char kNodeTag[] = "atlantis/node";
constexpr char kEmptyTag[] = "atlantis/empty";

Digest hashNode(const Digest& left, const Digest& right) {
    const auto l = left.toBytes();
    const auto r = right.toBytes();
    return hashToScalar({asBytes(kNodeTag), ByteSpan{l.data(), l.size()}, ByteSpan{r.data(), r.size()}});
}

std::uint64_t nodeKey(std::uint8_t level, std::uint32_t index) {
    return (static_cast<std::uint64_t>(level) << 32) | index;
}

} // namespace

SparseMerkleTree::SparseMerkleTree(std::uint8_t depth) : depth_(depth) {
    if (depth_ == 0 || depth_ > kMaxDepth) {
        fail(Errc::InvalidParameter, "tree depth must be in [1, 32]");
    }
    defaults_.resize(depth_ + 1);
    defaults_[0] = hashToScalar(asBytes(kEmptyTag));
    for (std::uint8_t level = 1; level <= depth_; ++level) {
        defaults_[level] = hashNode(defaults_[level - 1], defaults_[level - 1]);
    }
    root_ = defaults_[depth_];
}

std::uint32_t SparseMerkleTree::leafIndexFor(const Commitment& c, std::uint8_t depth) {
    const auto enc = c.toBytes();
    const auto digest =
        hashToScalar({asBytes(kLeafIndexTag), ByteSpan{enc.data(), enc.size()}}).toBytes();
    // Low `depth` bits of the field element (big-endian encoding).
    std::uint64_t low = 0;
    for (std::size_t i = kScalarBytes - 8; i < kScalarBytes; ++i) {
        low = (low << 8) | digest[i];
    }
    const std::uint64_t mask = depth >= 64 ? ~0ULL : ((1ULL << depth) - 1);
    return static_cast<std::uint32_t>(low & mask);
}

Digest SparseMerkleTree::leafDigestFor(const Commitment& c) {
    const auto enc = c.toBytes();
    return hashToScalar({asBytes(kLeafValueTag), ByteSpan{enc.data(), enc.size()}});
}

Digest SparseMerkleTree::nodeAt(std::uint8_t level, std::uint32_t index) const {
    if (level == 0) {
        const auto it = leaves_.find(index);
        return it == leaves_.end() ? defaults_[0] : it->second;
    }
    const auto it = nodes_.find(nodeKey(level, index));
    return it == nodes_.end() ? defaults_[level] : it->second;
}

Digest SparseMerkleTree::insert(const Commitment& c) {
    return insertLeafDigest(leafIndex(c), leafDigestFor(c));
}

Digest SparseMerkleTree::insertLeafDigest(std::uint32_t index, const Digest& leaf) {
    if (depth_ < 32 && (index >> depth_) != 0) {
        fail(Errc::InvalidParameter, "leaf index out of range for tree depth");
    }
    if (leaves_.contains(index)) {
        fail(Errc::IndexCollision, "tree slot already occupied");
    }
    leaves_.emplace(index, leaf);
    Digest current = leaf;
    std::uint32_t position = index;
    for (std::uint8_t level = 0; level < depth_; ++level) {
        const Digest sibling = nodeAt(level, position ^ 1u);
        current = (position & 1u) ? hashNode(sibling, current) : hashNode(current, sibling);
        position >>= 1;
        nodes_[nodeKey(level + 1, position)] = current;
    }
    root_ = current;
    return root_;
}

MerkleProof SparseMerkleTree::proveMembership(const Commitment& c) const {
    const std::uint32_t index = leafIndex(c);
    const auto it = leaves_.find(index);
    if (it == leaves_.end() || !(it->second == leafDigestFor(c))) {
        fail(Errc::NotFound, "commitment not present in the tree");
    }
    MerkleProof proof;
    proof.leafIndex = index;
    proof.siblings.reserve(depth_);
    std::uint32_t position = index;
    for (std::uint8_t level = 0; level < depth_; ++level) {
        proof.siblings.push_back(nodeAt(level, position ^ 1u));
        position >>= 1;
    }
    return proof;
}

bool SparseMerkleTree::verifyMembership(const Commitment& c, const MerkleProof& proof,
                                        const Digest& root, std::uint8_t depth) {
    if (proof.siblings.size() != depth) {
        return false;
    }
    if (depth < 32 && (proof.leafIndex >> depth) != 0) {
        return false;
    }
    Digest current = leafDigestFor(c);
    std::uint32_t position = proof.leafIndex;
    for (const Digest& sibling : proof.siblings) {
        current = (position & 1u) ? hashNode(sibling, current) : hashNode(current, sibling);
        position >>= 1;
    }
    return current == root;
}

Digest SparseMerkleTree::recomputeRoot() const {
    // Fold the sorted leaves level by level, tracking only occupied nodes.
    std::map<std::uint32_t, Digest> level = leaves_;
    for (std::uint8_t l = 0; l < depth_; ++l) {
        std::map<std::uint32_t, Digest> next;
        for (auto it = level.begin(); it != level.end(); ++it) {
            const std::uint32_t parent = it->first >> 1;
            if (next.contains(parent)) {
                continue;
            }
            const bool isRight = (it->first & 1u) != 0;
            const std::uint32_t siblingIdx = it->first ^ 1u;
            const auto sib = level.find(siblingIdx);
            const Digest sibling = sib == level.end() ? defaults_[l] : sib->second;
            next.emplace(parent, isRight ? hashNode(sibling, it->second)
                                         : hashNode(it->second, sibling));
        }
        level = std::move(next);
    }
    if (level.empty()) {
        return defaults_[depth_];
    }
    return level.begin()->second;
}

} // namespace atlantis
